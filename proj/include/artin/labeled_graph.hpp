#pragma once

#include <map>
#include <utility>

#include "artin/word.hpp"

namespace artin {

/// Finite simplicial graph with integer edge labels >= 2. Vertices double as
/// the generating alphabet of the group the graph presents: an edge labeled m
/// imposes the relation alternating in its endpoints of length m on each side
/// (m = 2 meaning the endpoints commute).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(Alphabet vertices) : vertices_(std::move(vertices)) {}

  /// Adds an edge {u, v} with the given label. Rejects loops, labels < 2 and
  /// repeated edges.
  void add_edge(std::size_t u, std::size_t v, int label);

  std::size_t rank() const { return vertices_.size(); }
  const Alphabet& vertices() const { return vertices_; }

  bool adjacent(std::size_t u, std::size_t v) const;
  std::optional<int> edge_label(std::size_t u, std::size_t v) const;

  /// True when every edge is labeled 2 (the graph presents a right-angled
  /// group).
  bool right_angled() const;

  std::size_t edge_count() const { return edges_.size(); }
  const std::map<std::pair<std::size_t, std::size_t>, int>& edges() const { return edges_; }

 private:
  Alphabet vertices_;
  std::map<std::pair<std::size_t, std::size_t>, int> edges_;  // key (u, v) with u < v
};

}  // namespace artin
