//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Ordering search: touching graph, admissibility filter, and the search for
// a linear order of the family together with a compatible embedding
// relation. The admissible touching graph can contain antiparallel arcs, so
// "topological ordering" is taken to mean: a linear order whose induced
// orientation of every touching pair lies in the admissible arc set.

#ifndef NLC_ORDERING_HPP_
#define NLC_ORDERING_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "nlc/compatibility.hpp"

namespace nlc {

/// Occurrence indices with an edge wherever two occurrences touch.
struct TouchingGraph {
  std::size_t size = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;  // i < j

  bool touches(std::size_t i, std::size_t j) const {
    return edges.count(i < j ? std::make_pair(i, j) : std::make_pair(j, i)) > 0;
  }
};

inline TouchingGraph touching_graph(const LabelledGraph& g, const Family& family) {
  validate_family(g, family);
  TouchingGraph t;
  t.size = family.members.size();
  for (std::size_t i = 0; i < t.size; ++i) {
    for (std::size_t j = i + 1; j < t.size; ++j) {
      if (are_touching(g, family.members[i].host_nodes,
                       family.members[j].host_nodes)) {
        t.edges.emplace(i, j);
      }
    }
  }
  return t;
}

/// Orientation of the touching edges along a linear order; acyclic by
/// construction (arcs always point from earlier to later position).
struct DirectedTouchingGraph {
  std::size_t size = 0;
  std::set<std::pair<std::size_t, std::size_t>> arcs;  // member indices
};

inline DirectedTouchingGraph directed_touching_graph(
    const TouchingGraph& t, const std::vector<std::size_t>& order) {
  DirectedTouchingGraph d;
  d.size = t.size;
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      if (t.touches(order[p], order[q])) d.arcs.emplace(order[p], order[q]);
    }
  }
  return d;
}

/// An arc (i, j) is admissible iff neither the family inset clashes with the
/// pair outset nor the pair inset with the family outset.
inline bool edge_admissible(const LabelledGraph& g, const Family& family,
                            std::size_t i, std::size_t j) {
  if (i == j || i >= family.members.size() || j >= family.members.size()) {
    throw InputError("invalid occurrence index pair");
  }
  const PairContext ctx = pair_in_out(g, family.members[i], family.members[j]);
  const InOutSets fam = family_in_out(g, family);
  return !sets::intersects(fam.inset, ctx.adjacent.outset) &&
         !sets::intersects(ctx.adjacent.inset, fam.outset);
}

/// Both orientations of every touching pair, filtered by admissibility.
/// Antiparallel arc pairs are common.
struct AdmissibleTouchingGraph {
  std::size_t size = 0;
  std::set<std::pair<std::size_t, std::size_t>> arcs;

  bool admits(std::size_t i, std::size_t j) const {
    return arcs.count(std::make_pair(i, j)) > 0;
  }
};

inline AdmissibleTouchingGraph admissible_touching_graph(const LabelledGraph& g,
                                                         const Family& family) {
  const TouchingGraph t = touching_graph(g, family);
  AdmissibleTouchingGraph a;
  a.size = t.size;
  for (const auto& [i, j] : t.edges) {
    if (edge_admissible(g, family, i, j)) a.arcs.emplace(i, j);
    if (edge_admissible(g, family, j, i)) a.arcs.emplace(j, i);
  }
  return a;
}

/// A linear order over the family plus a relation compatible for it.
struct OrderingWitness {
  std::vector<std::size_t> order;
  EmbeddingRelation relation;
};

inline constexpr std::size_t kDefaultSearchCap = 12;
inline constexpr std::size_t kDefaultBruteForceCap = 8;

namespace detail {

struct SearchState {
  const LabelledGraph* g;
  const Family* family;
  Label nonterminal;
  InOutSets family_sets;
  TouchingGraph touching;
  AdmissibleTouchingGraph admissible;
  // Pair contexts for cross-connected ordered pairs, keyed (earlier, later).
  std::map<std::pair<std::size_t, std::size_t>, PairContext> cross;

  bool cross_pair(std::size_t i, std::size_t j) const {
    return cross.count(std::make_pair(i, j)) > 0;
  }
};

// Depth-first construction of the order in ascending index order; the first
// completed order is the lexicographically smallest one. A prefix is pruned
// as soon as a placed pair violates admissibility or the separation
// conditions restricted to the arcs it already determines; both are monotone
// in the arc set, so pruning never loses a valid completion.
inline bool search_extend(const SearchState& st, std::vector<std::size_t>& prefix,
                          std::vector<bool>& used, std::set<LabelPair>& union_inset,
                          std::set<LabelPair>& union_full_outset) {
  const std::size_t n = st.family->members.size();
  if (prefix.size() == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool viable = true;
    for (std::size_t placed : prefix) {
      if (st.touching.touches(placed, cand) && !st.admissible.admits(placed, cand)) {
        viable = false;
        break;
      }
    }
    if (!viable) continue;

    std::set<LabelPair> next_inset = union_inset;
    std::set<LabelPair> next_outset = union_full_outset;
    for (std::size_t placed : prefix) {
      auto it = st.cross.find(std::make_pair(placed, cand));
      if (it == st.cross.end()) continue;
      next_inset.insert(it->second.adjacent.inset.begin(),
                        it->second.adjacent.inset.end());
      next_outset.insert(it->second.full.outset.begin(),
                         it->second.full.outset.end());
    }
    if (sets::intersects(next_inset, next_outset)) continue;
    if (sets::intersects(second_labels(next_inset),
                         second_labels(sets::intersection(st.family_sets.inset,
                                                          next_outset)))) {
      continue;
    }

    prefix.push_back(cand);
    used[cand] = true;
    std::swap(union_inset, next_inset);
    std::swap(union_full_outset, next_outset);
    if (search_extend(st, prefix, used, union_inset, union_full_outset)) return true;
    std::swap(union_inset, next_inset);
    std::swap(union_full_outset, next_outset);
    used[cand] = false;
    prefix.pop_back();
  }
  return false;
}

}  // namespace detail

/// Searches for a linear order with a compatible relation. Returns absent
/// immediately when the family inset meets the family outset or some
/// touching pair admits neither orientation; otherwise returns the
/// lexicographically smallest passing order with the canonical witness.
inline std::optional<OrderingWitness> search_ordering(
    const LabelledGraph& g, const Family& family,
    const Label& nonterminal = kDefaultNonterminal,
    std::size_t cap = kDefaultSearchCap) {
  require_nonterminal_free(g, nonterminal);
  validate_family(g, family);
  if (family.members.size() > cap) {
    throw InputError("family size " + std::to_string(family.members.size()) +
                     " exceeds the ordering-search cap " + std::to_string(cap));
  }

  detail::SearchState st;
  st.g = &g;
  st.family = &family;
  st.nonterminal = nonterminal;
  st.family_sets = family_in_out(g, family);
  if (sets::intersects(st.family_sets.inset, st.family_sets.outset)) {
    return std::nullopt;
  }
  st.touching = touching_graph(g, family);
  st.admissible = admissible_touching_graph(g, family);
  for (const auto& [i, j] : st.touching.edges) {
    if (!st.admissible.admits(i, j) && !st.admissible.admits(j, i)) {
      return std::nullopt;
    }
    if (cross_connected(g, family.members[i].host_nodes,
                        family.members[j].host_nodes)) {
      st.cross.emplace(std::make_pair(i, j),
                       pair_in_out(g, family.members[i], family.members[j]));
      st.cross.emplace(std::make_pair(j, i),
                       pair_in_out(g, family.members[j], family.members[i]));
    }
  }

  std::vector<std::size_t> prefix;
  std::vector<bool> used(family.members.size(), false);
  std::set<LabelPair> union_inset;
  std::set<LabelPair> union_full_outset;
  if (!detail::search_extend(st, prefix, used, union_inset, union_full_outset)) {
    return std::nullopt;
  }

  std::set<LabelPair> pairs = sets::set_union(st.family_sets.inset, union_inset);
  for (const Label& x : second_labels(union_inset)) {
    pairs.insert(LabelPair{x, nonterminal});
  }
  return OrderingWitness{
      std::move(prefix),
      make_embedding(std::move(pairs), default_alphabet(g, family.pattern, nonterminal))};
}

/// Testing oracle: every permutation with a compatible relation, each with
/// its canonical witness, in lexicographic order of the index sequences.
inline std::vector<OrderingWitness> brute_force_search(
    const LabelledGraph& g, const Family& family,
    const Label& nonterminal = kDefaultNonterminal,
    std::size_t cap = kDefaultBruteForceCap) {
  validate_family(g, family);
  if (family.members.size() > cap) {
    throw InputError("family size " + std::to_string(family.members.size()) +
                     " exceeds the brute-force cap " + std::to_string(cap));
  }
  std::vector<std::size_t> order = identity_order(family);
  std::vector<OrderingWitness> out;
  do {
    if (auto witness = ordering_existence(g, family, order, nonterminal)) {
      out.push_back(OrderingWitness{order, std::move(*witness)});
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace nlc

#endif  // NLC_ORDERING_HPP_
