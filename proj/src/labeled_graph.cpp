#include "artin/labeled_graph.hpp"

namespace artin {

void LabeledGraph::add_edge(std::size_t u, std::size_t v, int label) {
  if (u >= rank() || v >= rank())
    throw std::invalid_argument("edge endpoint is not a vertex");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (label < 2) throw std::invalid_argument("edge label must be at least 2");
  auto key = std::minmax(u, v);
  if (!edges_.emplace(std::make_pair(key.first, key.second), label).second)
    throw std::invalid_argument("repeated edge");
}

bool LabeledGraph::adjacent(std::size_t u, std::size_t v) const {
  return edge_label(u, v).has_value();
}

std::optional<int> LabeledGraph::edge_label(std::size_t u, std::size_t v) const {
  if (u == v) return std::nullopt;
  auto key = std::minmax(u, v);
  auto it = edges_.find(std::make_pair(key.first, key.second));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

bool LabeledGraph::right_angled() const {
  for (const auto& [edge, label] : edges_)
    if (label != 2) return false;
  return true;
}

}  // namespace artin
