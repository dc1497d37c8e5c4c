//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Family contraction and the forward-simulation oracle. Contracting replaces
// each occurrence by one nonterminal-labelled node; re-deriving from that
// skeleton and comparing against the host decides whether an embedding
// relation can generate the family in a given order.

#ifndef NLC_SKELETON_HPP_
#define NLC_SKELETON_HPP_

#include <map>
#include <string>
#include <vector>

#include "nlc/occurrence.hpp"
#include "nlc/rule.hpp"

namespace nlc {

/// The host with every occurrence contracted to a nonterminal node.
struct HostSkeleton {
  LabelledGraph graph;
  std::map<std::size_t, NodeId> occurrence_nodes;  // member index -> node
};

/// Contracts each occurrence to a fresh nonterminal node v_i. v_i is joined
/// to every outside neighbour of the occurrence, and v_i to v_j iff the host
/// has at least one edge between the two occurrences; edges among untouched
/// nodes are preserved. This is the minimal start graph: re-deriving from it
/// succeeds whenever re-deriving from any start graph does.
inline HostSkeleton contract_family(const LabelledGraph& g, const Family& family,
                                    const Label& nonterminal = kDefaultNonterminal) {
  validate_family(g, family);
  const std::set<NodeId> occupied = family_nodes(family);

  HostSkeleton skeleton;
  skeleton.graph = g;
  for (const NodeId& id : occupied) skeleton.graph.remove_node(id);

  for (std::size_t i = 0; i < family.members.size(); ++i) {
    NodeId name = "#" + std::to_string(i + 1);
    while (skeleton.graph.has_node(name)) name = "#" + name;
    skeleton.graph.add_node(name, nonterminal);
    skeleton.occurrence_nodes.emplace(i, name);
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const std::set<NodeId> outside =
        sets::difference(neighborhood(g, family.members[i].host_nodes), occupied);
    for (const NodeId& y : outside) {
      skeleton.graph.add_edge(skeleton.occurrence_nodes.at(i), y);
    }
    for (std::size_t j = i + 1; j < family.members.size(); ++j) {
      if (cross_connected(g, family.members[i].host_nodes,
                          family.members[j].host_nodes)) {
        skeleton.graph.add_edge(skeleton.occurrence_nodes.at(i),
                                skeleton.occurrence_nodes.at(j));
      }
    }
  }
  return skeleton;
}

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

/// Re-derives the host from a prebuilt skeleton, naming every created node
/// with the original host identifier of its occurrence, and compares the
/// result against `expected` for exact equality.
inline VerifyResult replay_skeleton(const HostSkeleton& skeleton,
                                    const Family& family,
                                    const std::vector<std::size_t>& order,
                                    const EmbeddingRelation& embedding,
                                    const LabelledGraph& expected,
                                    const Label& nonterminal = kDefaultNonterminal) {
  require_member_permutation(family, order);
  NlcRule rule{nonterminal, family.pattern, embedding};
  LabelledGraph current = skeleton.graph;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t member = order[step];
    CopyMap names;
    for (const auto& [p, h] : family.members[member].embedding) names.emplace(p, h);
    try {
      current = apply_rule(current, rule, skeleton.occurrence_nodes.at(member), names);
    } catch (const InputError& e) {
      return VerifyResult{false, "step " + std::to_string(step + 1) + ": " + e.what()};
    }
  }
  if (!(current == expected)) {
    return VerifyResult{false, "re-derived graph differs from the host"};
  }
  return VerifyResult{true, ""};
}

/// Contracts the family and re-derives it in order `order` with relation
/// `embedding`; true iff the host graph is reproduced exactly (same node
/// identifiers, labels and edge set).
inline VerifyResult verify_forward(const LabelledGraph& g, const Family& family,
                                   const std::vector<std::size_t>& order,
                                   const EmbeddingRelation& embedding,
                                   const Label& nonterminal = kDefaultNonterminal) {
  HostSkeleton skeleton = contract_family(g, family, nonterminal);
  return replay_skeleton(skeleton, family, order, embedding, g, nonterminal);
}

}  // namespace nlc

#endif  // NLC_SKELETON_HPP_
