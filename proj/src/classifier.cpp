#include "artin/classifier.hpp"

#include <algorithm>

namespace artin {
namespace {

bool is_square(Pattern p) {
  return p == Pattern::kSquarePlain || p == Pattern::kSquareOneDiagonal ||
         p == Pattern::kSquareTwoDiagonals;
}

// Checks one of the three ways to arrange four vertices in a cycle. cyc
// lists the vertices in cycle order; diagonals are (cyc[0], cyc[2]) and
// (cyc[1], cyc[3]).
std::optional<ForbiddenWitness> match_square(const LabeledGraph& g,
                                             const std::array<std::size_t, 4>& cyc) {
  for (int e = 0; e < 4; ++e) {
    auto label = g.edge_label(cyc[static_cast<std::size_t>(e)], cyc[(static_cast<std::size_t>(e) + 1) % 4]);
    if (!label || *label != 2) return std::nullopt;
  }
  auto d1 = g.edge_label(cyc[0], cyc[2]);
  auto d2 = g.edge_label(cyc[1], cyc[3]);
  // A diagonal labeled 2 collapses the cycle to a cone; no conclusion then.
  if ((d1 && *d1 == 2) || (d2 && *d2 == 2)) return std::nullopt;
  ForbiddenWitness w;
  w.vertices.assign(cyc.begin(), cyc.end());
  if (d1) w.labels.push_back(*d1);
  if (d2) w.labels.push_back(*d2);
  if (!d1 && !d2)
    w.pattern = Pattern::kSquarePlain;
  else if (d1 && d2)
    w.pattern = Pattern::kSquareTwoDiagonals;
  else
    w.pattern = Pattern::kSquareOneDiagonal;
  return w;
}

void find_on_triple(const LabeledGraph& g, std::size_t i, std::size_t j, std::size_t k,
                    std::vector<ForbiddenWitness>& out) {
  auto ij = g.edge_label(i, j), ik = g.edge_label(i, k), jk = g.edge_label(j, k);
  int edges = int(ij.has_value()) + int(ik.has_value()) + int(jk.has_value());
  if (edges == 3) {
    int twos = int(*ij == 2) + int(*ik == 2) + int(*jk == 2);
    if (twos <= 1) out.push_back({Pattern::kTriangle, {i, j, k}, {*ij, *ik, *jk}});
  } else if (edges == 2) {
    // middle vertex = the one on both edges
    std::size_t mid, e1, e2;
    if (!ij)
      mid = k, e1 = i, e2 = j;
    else if (!ik)
      mid = j, e1 = i, e2 = k;
    else
      mid = i, e1 = j, e2 = k;
    int p = *g.edge_label(e1, mid), q = *g.edge_label(mid, e2);
    if (p != 2 || q != 2) out.push_back({Pattern::kPath3, {e1, mid, e2}, {p, q}});
  }
}

void find_on_quad(const LabeledGraph& g, const std::array<std::size_t, 4>& vs,
                  std::vector<ForbiddenWitness>& out) {
  // The three pairings of four vertices into opposite (diagonal) pairs give
  // the three candidate cycles; at most one can consist of 2-labeled edges.
  const std::array<std::array<std::size_t, 4>, 3> cycles = {{
      {vs[0], vs[1], vs[2], vs[3]},
      {vs[0], vs[1], vs[3], vs[2]},
      {vs[0], vs[2], vs[1], vs[3]},
  }};
  for (const auto& cyc : cycles) {
    if (auto w = match_square(g, cyc)) {
      out.push_back(*w);
      return;
    }
  }

  // Induced path on all four vertices, every edge labeled 2.
  int edges = 0;
  std::array<int, 4> degree{};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x + 1; y < 4; ++y) {
      auto l = g.edge_label(vs[x], vs[y]);
      if (!l) continue;
      if (*l != 2) return;
      ++edges;
      ++degree[x];
      ++degree[y];
    }
  if (edges != 3) return;
  int ends = int(degree[0] == 1) + int(degree[1] == 1) + int(degree[2] == 1) + int(degree[3] == 1);
  if (ends != 2) return;  // three edges, not a path (a star or a triangle)
  // Walk the path from its smaller endpoint.
  std::size_t start = 4;
  for (std::size_t x = 0; x < 4; ++x)
    if (degree[x] == 1) {
      start = x;
      break;
    }
  std::vector<std::size_t> order{vs[start]};
  std::size_t prev = 4, cur = start;
  while (order.size() < 4) {
    for (std::size_t y = 0; y < 4; ++y) {
      if (y != cur && y != prev && g.adjacent(vs[cur], vs[y])) {
        order.push_back(vs[y]);
        prev = cur;
        cur = y;
        break;
      }
    }
  }
  out.push_back({Pattern::kPath4All2, order, {}});
}

void add_structure_notes(const LabeledGraph& g, Verdict& v) {
  if (g.rank() == 0) v.notes.push_back("rank 0: the trivial group");
  if (g.rank() == 1) v.notes.push_back("rank 1: infinite cyclic");
  if (g.rank() == 2) {
    if (g.edge_count() == 0) {
      v.notes.push_back("rank 2, no edge: free of rank 2");
    } else {
      int m = g.edges().begin()->second;
      DihedralStructure s = dihedral_structure(m);
      if (s.kind == DihedralStructure::Kind::kTorusKnot)
        v.notes.push_back("rank 2, label " + std::to_string(m) + ": torus knot group of type (" +
                          std::to_string(s.p) + ", " + std::to_string(s.q) + ")");
      else
        v.notes.push_back("rank 2, label " + std::to_string(m) + ": Baumslag-Solitar group BS(" +
                          std::to_string(s.p) + ", " + std::to_string(s.q) + ")");
    }
  }
  if (auto n = braid_strands(g)) {
    v.notes.push_back("presents the braid group on " + std::to_string(*n) +
                      " strands; the verdicts also hold for its pure braid group "
                      "(finite index, and the undecidability witnesses are pure)");
  }
}

}  // namespace

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::kSquarePlain: return "square-plain";
    case Pattern::kSquareOneDiagonal: return "square-one-diagonal";
    case Pattern::kSquareTwoDiagonals: return "square-two-diagonals";
    case Pattern::kTriangle: return "triangle";
    case Pattern::kPath4All2: return "path4-all-2";
    case Pattern::kPath3: return "path3";
  }
  return "?";
}

const char* status_name(Status s) {
  switch (s) {
    case Status::kDecidable: return "decidable";
    case Status::kUndecidable: return "undecidable";
    case Status::kOpen: return "open";
  }
  return "?";
}

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::kSubmonoidMembership: return "submonoid_membership";
    case Problem::kRationalSubsetMembership: return "rational_subset_membership";
    case Problem::kFixedTargetSubmonoid: return "fixed_target_submonoid";
    case Problem::kSemigroupIntersection: return "semigroup_intersection";
    case Problem::kIdentityProblem: return "identity_problem";
    case Problem::kGroupProblem: return "group_problem";
    case Problem::kSubgroupMembership: return "subgroup_membership";
  }
  return "?";
}

std::vector<ForbiddenWitness> find_forbidden(const LabeledGraph& g) {
  std::vector<ForbiddenWitness> out;
  std::size_t n = g.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) find_on_triple(g, i, j, k, out);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) find_on_quad(g, {i, j, k, l}, out);
  return out;
}

Verdict classify(const LabeledGraph& g) {
  std::vector<ForbiddenWitness> found = find_forbidden(g);
  Verdict v;
  if (found.empty()) {
    v.status.fill(Status::kDecidable);
    v.justifications.push_back(
        "no forbidden induced subgraph: the group is subgroup separable and lies in the "
        "class with decidable rational subset membership, to which the remaining "
        "problems reduce");
  } else {
    auto square = std::find_if(found.begin(), found.end(),
                               [](const ForbiddenWitness& w) { return is_square(w.pattern); });
    v.status.fill(Status::kUndecidable);
    if (square != found.end()) {
      v.witness = *square;
      v.justifications.push_back(
          "the witness subgraph yields a direct product of free groups of rank 2, where "
          "subgroup membership (Mikhailova) and the identity and group problems are "
          "undecidable; the submonoid-flavoured problems inherit this");
    } else {
      v.witness = found.front();
      for (Problem p : {Problem::kIdentityProblem, Problem::kGroupProblem,
                        Problem::kSubgroupMembership})
        v.status[static_cast<std::size_t>(p)] = Status::kOpen;
      v.justifications.push_back(
          "the witness subgraph yields a subgroup containing the group of the 2-labeled "
          "path on four vertices, where submonoid, rational subset, fixed-target and "
          "semigroup intersection membership are undecidable; the identity, group and "
          "subgroup problems remain open there");
    }
  }
  add_structure_notes(g, v);
  return v;
}

LabeledGraph braid_graph(int n) {
  if (n < 2) throw std::invalid_argument("braid group needs at least 2 strands");
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  LabeledGraph g(Alphabet(std::move(names)));
  for (std::size_t i = 0; i + 1 < g.rank(); ++i)
    for (std::size_t j = i + 1; j < g.rank(); ++j)
      g.add_edge(i, j, j == i + 1 ? 3 : 2);
  return g;
}

std::optional<int> braid_strands(const LabeledGraph& g) {
  std::size_t r = g.rank();
  if (r == 0) return std::nullopt;
  if (r == 1) return g.edge_count() == 0 ? std::optional<int>(2) : std::nullopt;
  // Complete graph, labels 2 and 3, with the 3-labeled edges forming a path
  // through all vertices (in any vertex order).
  std::vector<std::vector<std::size_t>> three(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      auto l = g.edge_label(i, j);
      if (!l || (*l != 2 && *l != 3)) return std::nullopt;
      if (*l == 3) {
        three[i].push_back(j);
        three[j].push_back(i);
      }
    }
  std::size_t ends = 0, total = 0;
  for (const auto& adj : three) {
    if (adj.empty() || adj.size() > 2) return std::nullopt;
    if (adj.size() == 1) ++ends;
    total += adj.size();
  }
  if (ends != 2 || total != 2 * (r - 1)) return std::nullopt;
  // Walk from one endpoint; a path visits every vertex exactly once.
  std::size_t start = 0;
  while (three[start].size() != 1) ++start;
  std::size_t prev = r, cur = start, visited = 1;
  while (true) {
    std::size_t next = r;
    for (std::size_t y : three[cur])
      if (y != prev) next = y;
    if (next == r) break;
    prev = cur;
    cur = next;
    ++visited;
  }
  return visited == r ? std::optional<int>(static_cast<int>(r) + 1) : std::nullopt;
}

DihedralStructure dihedral_structure(int m) {
  if (m < 2) throw std::invalid_argument("relation length must be at least 2");
  DihedralStructure s;
  if (m % 2 == 1) {
    s.kind = DihedralStructure::Kind::kTorusKnot;
    s.p = 2;
    s.q = m;
  } else {
    s.kind = DihedralStructure::Kind::kBaumslagSolitar;
    s.p = m / 2;
    s.q = m / 2;
  }
  return s;
}

}  // namespace artin
