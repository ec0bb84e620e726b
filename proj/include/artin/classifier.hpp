#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "artin/labeled_graph.hpp"

namespace artin {

/// Induced labeled subgraphs that force undecidability of membership-style
/// problems in the group presented by the graph.
enum class Pattern {
  kSquarePlain,         // 4-cycle, edges labeled 2, no diagonals
  kSquareOneDiagonal,   // ... plus one diagonal labeled > 2
  kSquareTwoDiagonals,  // ... plus both diagonals labeled > 2
  kTriangle,            // triangle with at most one edge labeled 2
  kPath4All2,           // induced path on 4 vertices, all edges labeled 2
  kPath3,               // induced path on 3 vertices, labels not both 2
};

const char* pattern_name(Pattern p);

/// A concrete occurrence of a pattern: the vertices realizing it (cycle
/// order for squares, path order for paths, increasing order for triangles)
/// and the labels that parametrize it (diagonal labels for squares, all
/// three labels for triangles, both labels for 3-vertex paths).
struct ForbiddenWitness {
  Pattern pattern = Pattern::kSquarePlain;
  std::vector<std::size_t> vertices;
  std::vector<int> labels;

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// All pattern occurrences, enumerated over vertex subsets in lexicographic
/// order (3-vertex patterns first), so the output is deterministic.
std::vector<ForbiddenWitness> find_forbidden(const LabeledGraph& g);

enum class Status { kDecidable, kUndecidable, kOpen };

const char* status_name(Status s);

/// The membership-style decision problems a verdict reports on.
enum class Problem {
  kSubmonoidMembership,
  kRationalSubsetMembership,
  kFixedTargetSubmonoid,
  kSemigroupIntersection,
  kIdentityProblem,
  kGroupProblem,
  kSubgroupMembership,
};
inline constexpr std::size_t kProblemCount = 7;

const char* problem_name(Problem p);

/// Per-problem statuses for one group, with a witness subgraph when any
/// problem is undecidable, human-readable justifications, and structural
/// notes (small-rank isomorphism types, braid-group recognition).
struct Verdict {
  std::array<Status, kProblemCount> status{};
  std::optional<ForbiddenWitness> witness;
  std::vector<std::string> justifications;
  std::vector<std::string> notes;

  Status of(Problem p) const { return status[static_cast<std::size_t>(p)]; }
};

/// Decides the seven problems for the group presented by g:
/// - no forbidden pattern: everything decidable;
/// - any square pattern: everything undecidable;
/// - only triangle / path patterns: the four submonoid-flavoured problems
///   are undecidable, the identity, group and subgroup problems stay open.
Verdict classify(const LabeledGraph& g);

/// The labeled graph presenting the braid group on n strands: vertices
/// s1, ..., s(n-1), consecutive pairs labeled 3, all other pairs labeled 2.
/// Requires n >= 2.
LabeledGraph braid_graph(int n);

/// Recognizes graphs of the form braid_graph(n), returning n.
std::optional<int> braid_strands(const LabeledGraph& g);

/// Isomorphism type of the two-generator group with a single relation
/// alternating in the generators of length m on each side: for odd m the
/// torus knot group <x, y | x^2 = y^m>, for even m the Baumslag-Solitar-like
/// extension BS(m/2, m/2). Requires m >= 2.
struct DihedralStructure {
  enum class Kind { kTorusKnot, kBaumslagSolitar } kind = Kind::kTorusKnot;
  int p = 0, q = 0;  // torus knot: (2, m); Baumslag-Solitar: (m/2, m/2)

  friend bool operator==(const DihedralStructure&, const DihedralStructure&) = default;
};
DihedralStructure dihedral_structure(int m);

}  // namespace artin
