#include "artin/raag.hpp"

namespace artin {
namespace {

// Letters act like a trace alphabet: two letters are independent when they
// sit on distinct, adjacent vertices. A letter never commutes with its own
// inverse for rewriting purposes (same vertex).
bool independent(const LabeledGraph& g, const Letter& a, const Letter& b) {
  return a.gen != b.gen && g.adjacent(a.gen, b.gen);
}

// Removes one cancelling pair visible through independent letters, if any.
bool cancel_once(const LabeledGraph& g, std::vector<Letter>& v) {
  for (std::size_t j = 1; j < v.size(); ++j) {
    for (std::size_t k = j; k-- > 0;) {
      if (v[k].gen == v[j].gen) {
        if (v[k].sign != v[j].sign) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
          return true;
        }
        break;  // same generator, same sign: blocks any earlier partner
      }
      if (!g.adjacent(v[k].gen, v[j].gen)) break;
    }
  }
  return false;
}

void validate(const LabeledGraph& g, const GroupWord& w) {
  if (!g.right_angled())
    throw std::invalid_argument("word problem kernel requires all edge labels equal to 2");
  if (!fits_alphabet(w, g.vertices()))
    throw std::invalid_argument("word contains a letter that is not a vertex");
}

}  // namespace

const LabeledGraph& p4_graph() {
  static const LabeledGraph graph = [] {
    LabeledGraph g(Alphabet({"a", "b", "c", "d"}));
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 2);
    return g;
  }();
  return graph;
}

GroupWord raag_canonical_form(const LabeledGraph& graph, const GroupWord& w) {
  validate(graph, w);

  // Phase 1: shuffle reduction. At the fixpoint no cancelling pair can be
  // brought together by swapping independent letters, which characterizes
  // the geodesic representatives of the element.
  std::vector<Letter> v(w.begin(), w.end());
  while (cancel_once(graph, v)) {
  }

  // Phase 2: all geodesic representatives differ only by swaps of
  // independent letters, so greedily extracting the least letter whose
  // predecessors are all independent of it yields the
  // length-lexicographic minimum of the class.
  std::vector<Letter> out;
  out.reserve(v.size());
  while (!v.empty()) {
    std::size_t best = v.size();
    for (std::size_t k = 0; k < v.size(); ++k) {
      bool available = true;
      for (std::size_t m = 0; m < k && available; ++m)
        available = independent(graph, v[m], v[k]);
      if (available && (best == v.size() || letter_less(v[k], v[best]))) best = k;
    }
    out.push_back(v[best]);
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return GroupWord(std::move(out));
}

bool raag_is_trivial(const LabeledGraph& graph, const GroupWord& w) {
  return raag_canonical_form(graph, w).empty();
}

bool commutes(const LabeledGraph& graph, const GroupWord& u, const GroupWord& v) {
  GroupWord commutator = u * v * u.inverse() * v.inverse();
  return raag_is_trivial(graph, commutator);
}

GroupWord p4_conjugate_vertex(long n) {
  constexpr std::uint32_t kA = 0, kB = 1, kC = 2, kD = 3;

  // Conjugator: for n >= 1 alternate d, a, d, ... of length n - 2; for
  // n <= 0 alternate a, d, a, ... of length 1 - n.
  std::vector<Letter> conj;
  if (n >= 1) {
    long len = n - 2;
    for (long i = 0; i < len; ++i) conj.push_back({i % 2 == 0 ? kD : kA, 1});
  } else {
    long len = 1 - n;
    for (long i = 0; i < len; ++i) conj.push_back({i % 2 == 0 ? kA : kD, 1});
  }
  Letter middle{(n % 2 == 0) ? kC : kB, 1};

  GroupWord w(std::move(conj));
  GroupWord result = w;
  result.push_back(middle);
  result.append(w.inverse());
  return result;
}

P4StarEmbedding p4_star_embedding() {
  P4StarEmbedding e;
  e.x = p4_conjugate_vertex(0);
  e.y = p4_conjugate_vertex(2);
  e.z = p4_conjugate_vertex(-2);
  for (int i = 0; i < 4; ++i) e.g[static_cast<std::size_t>(i)] = p4_conjugate_vertex(4 + i);
  return e;
}

}  // namespace artin
