//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef NLC_ISOMORPHISM_HPP_
#define NLC_ISOMORPHISM_HPP_

#include <map>
#include <optional>
#include <vector>

#include "nlc/graph.hpp"

namespace nlc {

namespace detail {

inline bool extend_isomorphism(const LabelledGraph& g1, const LabelledGraph& g2,
                               const std::vector<NodeId>& order,
                               std::size_t depth, std::map<NodeId, NodeId>& map,
                               std::set<NodeId>& used) {
  if (depth == order.size()) return true;
  const NodeId& u = order[depth];
  // Candidates in lexicographic order: the first completed assignment is the
  // lexicographically smallest mapping.
  for (const auto& [v, v_label] : g2.nodes()) {
    if (sets::contains(used, v)) continue;
    if (v_label != g1.label(u)) continue;
    if (g2.neighbors(v).size() != g1.neighbors(u).size()) continue;
    bool consistent = true;
    for (const auto& [w, wv] : map) {
      if (g1.has_edge(u, w) != g2.has_edge(v, wv)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    map.emplace(u, v);
    used.insert(v);
    if (extend_isomorphism(g1, g2, order, depth + 1, map, used)) return true;
    map.erase(u);
    used.erase(v);
  }
  return false;
}

}  // namespace detail

/// A label-preserving, edge-preserving bijection from g1 onto g2, or absent.
/// Deterministic: plain backtracking over sorted node identifiers with label
/// and degree pruning; first assignment in lexicographic order wins. Meant
/// for desk-scale patterns.
inline std::optional<std::map<NodeId, NodeId>> label_isomorphism(
    const LabelledGraph& g1, const LabelledGraph& g2) {
  if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count()) {
    return std::nullopt;
  }
  std::vector<std::pair<Label, std::size_t>> sig1, sig2;
  for (const auto& [id, label] : g1.nodes()) {
    sig1.emplace_back(label, g1.neighbors(id).size());
  }
  for (const auto& [id, label] : g2.nodes()) {
    sig2.emplace_back(label, g2.neighbors(id).size());
  }
  std::sort(sig1.begin(), sig1.end());
  std::sort(sig2.begin(), sig2.end());
  if (sig1 != sig2) return std::nullopt;

  std::vector<NodeId> order;
  for (const auto& [id, label] : g1.nodes()) order.push_back(id);
  std::map<NodeId, NodeId> map;
  std::set<NodeId> used;
  if (detail::extend_isomorphism(g1, g2, order, 0, map, used)) return map;
  return std::nullopt;
}

}  // namespace nlc

#endif  // NLC_ISOMORPHISM_HPP_
