#pragma once

#include <array>

#include "artin/labeled_graph.hpp"
#include "artin/word.hpp"

namespace artin {

/// The path graph a - b - c - d with all edges labeled 2 (vertex order
/// a, b, c, d).
const LabeledGraph& p4_graph();

/// Canonical form for a word in the right-angled group presented by `graph`:
/// the shuffle-reduced, length-lexicographically least representative under
/// the vertex declaration order (positive letter before its inverse).
/// Requires a right-angled graph and letters indexing its vertices.
/// Idempotent and constant on equivalence classes.
GroupWord raag_canonical_form(const LabeledGraph& graph, const GroupWord& w);

/// True iff w represents the identity of the right-angled group of `graph`.
bool raag_is_trivial(const LabeledGraph& graph, const GroupWord& w);

/// True iff the elements represented by u and v commute. The inputs need not
/// be canonical.
bool commutes(const LabeledGraph& graph, const GroupWord& u, const GroupWord& v);

/// Member n of the bi-infinite conjugate-vertex sequence in the group of
/// p4_graph(): a path of elements, consecutive members commuting and all
/// other pairs not. The base window is
///   x0 = a c a^-1,  x1 = b,  x2 = c,  x3 = d b d^-1,
/// extended in both directions by conjugating alternately with d and a.
GroupWord p4_conjugate_vertex(long n);

/// Images of the generators of the star graph
///   g1, g2, g3, g4 - x - y,  x - z
/// inside the group of p4_graph(), realized on the conjugate-vertex sequence:
/// x -> x0, y -> x2, z -> x-2, gi -> x(3+i). Every declared edge maps to a
/// commuting pair and every non-edge to a non-commuting pair.
struct P4StarEmbedding {
  GroupWord x, y, z;
  std::array<GroupWord, 4> g;
};
P4StarEmbedding p4_star_embedding();

}  // namespace artin
