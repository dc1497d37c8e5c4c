//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef NLC_OCCURRENCE_HPP_
#define NLC_OCCURRENCE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "nlc/graph.hpp"
#include "nlc/isomorphism.hpp"

namespace nlc {

/// A node subset of a host graph together with a label-preserving
/// isomorphism from a pattern graph onto the induced subgraph on those
/// nodes. host_nodes always equals the image of the embedding.
struct Occurrence {
  std::set<NodeId> host_nodes;
  std::map<NodeId, NodeId> embedding;  // pattern node -> host node

  bool operator==(const Occurrence&) const = default;
};

/// Throws ValidationError unless the occurrence is an induced,
/// label-preserving copy of the pattern inside the host.
inline void validate_occurrence(const LabelledGraph& host,
                                const LabelledGraph& pattern,
                                const Occurrence& occ) {
  if (occ.embedding.size() != pattern.node_count()) {
    throw ValidationError("occurrence embedding does not cover the pattern");
  }
  std::set<NodeId> image;
  for (const auto& [p, h] : occ.embedding) {
    if (!pattern.has_node(p)) {
      throw ValidationError("occurrence embedding uses unknown pattern node " + p);
    }
    if (!host.has_node(h)) {
      throw ValidationError("occurrence embedding uses unknown host node " + h);
    }
    if (!image.insert(h).second) {
      throw ValidationError("occurrence embedding is not injective at " + h);
    }
    if (pattern.label(p) != host.label(h)) {
      throw ValidationError("occurrence embedding is not label-preserving at " + p);
    }
  }
  if (image != occ.host_nodes) {
    throw ValidationError("occurrence node set differs from the embedding image");
  }
  // Edge-preserving in both directions onto the induced subgraph.
  for (const auto& [p1, h1] : occ.embedding) {
    for (const auto& [p2, h2] : occ.embedding) {
      if (p1 < p2 && pattern.has_edge(p1, p2) != host.has_edge(h1, h2)) {
        throw ValidationError("occurrence is not an induced copy of the pattern (" +
                              p1 + "," + p2 + ")");
      }
    }
  }
}

/// Builds an occurrence on the given host nodes. When no mapping is supplied
/// the canonical one is inferred from the pattern onto the induced subgraph.
inline Occurrence make_occurrence(
    const LabelledGraph& host, const LabelledGraph& pattern,
    const std::set<NodeId>& nodes,
    const std::optional<std::map<NodeId, NodeId>>& mapping = std::nullopt) {
  Occurrence occ;
  occ.host_nodes = nodes;
  if (mapping.has_value()) {
    occ.embedding = *mapping;
  } else {
    auto iso = label_isomorphism(pattern, induced_subgraph(host, nodes));
    if (!iso.has_value()) {
      throw ValidationError("node set is not an induced copy of the pattern");
    }
    occ.embedding = *iso;
  }
  validate_occurrence(host, pattern, occ);
  return occ;
}

/// A family of occurrences of one shared pattern; members are therefore
/// mutually isomorphic by construction.
struct Family {
  LabelledGraph pattern;
  std::vector<Occurrence> members;
};

inline void require_pairwise_disjoint(const std::vector<Occurrence>& members) {
  std::set<NodeId> seen;
  for (const Occurrence& occ : members) {
    for (const NodeId& id : occ.host_nodes) {
      if (!seen.insert(id).second) {
        throw InputError("occurrences overlap at node " + id);
      }
    }
  }
}

inline void validate_family(const LabelledGraph& host, const Family& family,
                            bool require_disjoint = true) {
  for (const Occurrence& occ : family.members) {
    validate_occurrence(host, family.pattern, occ);
  }
  if (require_disjoint) require_pairwise_disjoint(family.members);
}

inline std::set<NodeId> family_nodes(const Family& family) {
  std::set<NodeId> out;
  for (const Occurrence& occ : family.members) {
    out.insert(occ.host_nodes.begin(), occ.host_nodes.end());
  }
  return out;
}

/// Checks that `order` is a permutation of the member indices.
inline void require_member_permutation(const Family& family,
                                       const std::vector<std::size_t>& order) {
  std::set<std::size_t> seen;
  for (std::size_t idx : order) {
    if (idx >= family.members.size() || !seen.insert(idx).second) {
      throw InputError("order is not a permutation of the family");
    }
  }
  if (seen.size() != family.members.size()) {
    throw InputError("order is not a permutation of the family");
  }
}

inline std::vector<std::size_t> identity_order(const Family& family) {
  std::vector<std::size_t> order(family.members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return order;
}

}  // namespace nlc

#endif  // NLC_OCCURRENCE_HPP_
