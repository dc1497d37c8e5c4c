//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Occurrence enumeration: all induced, label-preserving copies of a pattern
// in a host graph, and assembly of pairwise-disjoint families from them.

#ifndef NLC_PATTERN_HPP_
#define NLC_PATTERN_HPP_

#include <map>
#include <vector>

#include "nlc/occurrence.hpp"

namespace nlc {

inline constexpr std::size_t kDefaultOccurrenceCap = 10000;
inline constexpr std::size_t kDefaultFamilyCap = 1000;

/// Occurrences are deduplicated by host node set: pattern automorphisms do
/// not multiply entries, and the canonical embedding kept per node set is
/// the lexicographically smallest mapping.
struct OccurrenceList {
  LabelledGraph pattern;
  std::vector<Occurrence> occurrences;
  bool truncated = false;
};

namespace detail {

inline bool label_multiset_matches(const LabelledGraph& g,
                                   const std::vector<NodeId>& subset,
                                   const std::map<Label, std::size_t>& wanted) {
  std::map<Label, std::size_t> have;
  for (const NodeId& id : subset) ++have[g.label(id)];
  return have == wanted;
}

inline void enumerate_subsets(const LabelledGraph& g,
                              const std::vector<NodeId>& nodes,
                              const LabelledGraph& pattern,
                              const std::map<Label, std::size_t>& wanted,
                              std::size_t cap, std::size_t start,
                              std::vector<NodeId>& subset, OccurrenceList& out) {
  if (out.truncated) return;
  if (subset.size() == pattern.node_count()) {
    if (!label_multiset_matches(g, subset, wanted)) return;
    std::set<NodeId> w(subset.begin(), subset.end());
    auto iso = label_isomorphism(pattern, induced_subgraph(g, w));
    if (!iso.has_value()) return;
    if (out.occurrences.size() == cap) {
      out.truncated = true;
      return;
    }
    out.occurrences.push_back(Occurrence{std::move(w), std::move(*iso)});
    return;
  }
  for (std::size_t i = start; i < nodes.size(); ++i) {
    subset.push_back(nodes[i]);
    enumerate_subsets(g, nodes, pattern, wanted, cap, i + 1, subset, out);
    subset.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace detail

/// All node subsets of g whose induced subgraph is label-isomorphic to the
/// pattern, in lexicographic node-set order, up to `cap` (a hit beyond the
/// cap flags truncation and stops the scan).
inline OccurrenceList find_occurrences(const LabelledGraph& g,
                                       const LabelledGraph& pattern,
                                       std::size_t cap = kDefaultOccurrenceCap) {
  if (cap < 1) throw InputError("occurrence cap must be at least 1");
  if (pattern.node_count() == 0) throw InputError("empty pattern");
  OccurrenceList out;
  out.pattern = pattern;
  if (pattern.node_count() > g.node_count()) return out;

  std::vector<NodeId> nodes;
  for (const auto& [id, label] : g.nodes()) nodes.push_back(id);
  std::map<Label, std::size_t> wanted;
  for (const auto& [id, label] : pattern.nodes()) ++wanted[label];

  std::vector<NodeId> subset;
  detail::enumerate_subsets(g, nodes, pattern, wanted, cap, 0, subset, out);
  return out;
}

/// Size-k index subsets of the occurrence list with pairwise disjoint node
/// sets, in lexicographic index order, up to `cap`.
struct DisjointFamilies {
  std::vector<std::vector<std::size_t>> families;
  bool truncated = false;
};

namespace detail {

inline void enumerate_families(const std::vector<Occurrence>& occs,
                               const std::vector<std::vector<bool>>& disjoint,
                               std::size_t k, std::size_t cap, std::size_t start,
                               std::vector<std::size_t>& chosen,
                               DisjointFamilies& out) {
  if (out.truncated) return;
  if (chosen.size() == k) {
    if (out.families.size() == cap) {
      out.truncated = true;
      return;
    }
    out.families.push_back(chosen);
    return;
  }
  for (std::size_t i = start; i < occs.size(); ++i) {
    bool ok = true;
    for (std::size_t j : chosen) {
      if (!disjoint[j][i]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(i);
    enumerate_families(occs, disjoint, k, cap, i + 1, chosen, out);
    chosen.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace detail

inline DisjointFamilies disjoint_families(const OccurrenceList& list,
                                          std::size_t k,
                                          std::size_t cap = kDefaultFamilyCap) {
  if (k < 1) throw InputError("family size must be at least 1");
  if (cap < 1) throw InputError("family cap must be at least 1");
  const std::size_t n = list.occurrences.size();
  std::vector<std::vector<bool>> disjoint(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      disjoint[i][j] = disjoint[j][i] = !sets::intersects(
          list.occurrences[i].host_nodes, list.occurrences[j].host_nodes);
    }
  }
  DisjointFamilies out;
  std::vector<std::size_t> chosen;
  detail::enumerate_families(list.occurrences, disjoint, k, cap, 0, chosen, out);
  return out;
}

/// Assembles a Family value from chosen occurrence indices.
inline Family make_family_from(const OccurrenceList& list,
                               const std::vector<std::size_t>& indices) {
  Family family;
  family.pattern = list.pattern;
  for (std::size_t i : indices) {
    if (i >= list.occurrences.size()) throw InputError("occurrence index out of range");
    family.members.push_back(list.occurrences[i]);
  }
  return family;
}

}  // namespace nlc

#endif  // NLC_PATTERN_HPP_
