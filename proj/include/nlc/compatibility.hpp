//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Compatibility predicates: whether an embedding relation can generate one
// occurrence, an ordered pair, or a whole ordered family, plus the
// existence characterizations and the canonical witness construction.
//
// Pair conditions constrain an ordered pair only when the host has at least
// one cross edge between the two occurrences. Pairs touching solely through
// a shared outside neighbour impose nothing: the minimal start graph carries
// no edge between their nonterminal nodes, so no reconnection across the
// pair can ever fire. This keeps the predicates exactly equivalent to the
// forward-simulation oracle.

#ifndef NLC_COMPATIBILITY_HPP_
#define NLC_COMPATIBILITY_HPP_

#include <optional>
#include <vector>

#include "nlc/inout.hpp"
#include "nlc/occurrence.hpp"

namespace nlc {

/// Single-occurrence compatibility: the relation separates the occurrence's
/// inset from its outset.
inline bool single_compatible(const EmbeddingRelation& e, const LabelledGraph& g,
                              const Occurrence& s) {
  const InOutSets io = subgraph_in_out(g, s);
  return sets::is_subset(io.inset, e.pairs) &&
         !sets::intersects(e.pairs, io.outset);
}

/// The three per-pair conditions for an ordered pair (earlier, later):
///  1. every adjacent inset pair is in E;
///  2. (x, N) is in E for every second component x of the adjacent inset;
///  3. no full-outset pair is in E together with its (second, N) companion.
inline bool pair_conditions(const EmbeddingRelation& e, const PairContext& ctx,
                            const Label& nonterminal = kDefaultNonterminal) {
  if (!sets::is_subset(ctx.adjacent.inset, e.pairs)) return false;
  for (const Label& x : second_labels(ctx.adjacent.inset)) {
    if (!e.contains(x, nonterminal)) return false;
  }
  for (const LabelPair& p : ctx.full.outset) {
    if (e.contains(p) && e.contains(p.second, nonterminal)) return false;
  }
  return true;
}

/// Equivalent reformulation: condition 1 strengthened to a full separation
/// against the adjacent outset, condition 3 restricted to the pairs only the
/// full tuple set can realize.
inline bool pair_conditions_primed(const EmbeddingRelation& e,
                                   const PairContext& ctx,
                                   const Label& nonterminal = kDefaultNonterminal) {
  if (!sets::is_subset(ctx.adjacent.inset, e.pairs)) return false;
  if (sets::intersects(e.pairs, ctx.adjacent.outset)) return false;
  for (const Label& x : second_labels(ctx.adjacent.inset)) {
    if (!e.contains(x, nonterminal)) return false;
  }
  for (const LabelPair& p : sets::difference(ctx.full.outset, ctx.adjacent.outset)) {
    if (e.contains(p) && e.contains(p.second, nonterminal)) return false;
  }
  return true;
}

/// Everything about an ordered family a compatibility check needs, computed
/// once so the relation can vary cheaply.
struct SequenceContext {
  InOutSets family_sets;
  struct CrossPair {
    std::size_t earlier;  // position in the order, not member index
    std::size_t later;
    PairContext ctx;
  };
  std::vector<CrossPair> cross_pairs;
  Label nonterminal;
};

inline SequenceContext build_sequence_context(
    const LabelledGraph& g, const Family& family,
    const std::vector<std::size_t>& order,
    const Label& nonterminal = kDefaultNonterminal) {
  validate_family(g, family);
  require_member_permutation(family, order);
  SequenceContext ctx;
  ctx.nonterminal = nonterminal;
  ctx.family_sets = family_in_out(g, family);
  for (std::size_t p = 0; p < order.size(); ++p) {
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      const Occurrence& earlier = family.members[order[p]];
      const Occurrence& later = family.members[order[q]];
      if (cross_connected(g, earlier.host_nodes, later.host_nodes)) {
        ctx.cross_pairs.push_back(
            SequenceContext::CrossPair{p, q, pair_in_out(g, earlier, later)});
      }
    }
  }
  return ctx;
}

inline bool sequence_compatible(const EmbeddingRelation& e,
                                const SequenceContext& ctx) {
  if (!sets::is_subset(ctx.family_sets.inset, e.pairs)) return false;
  if (sets::intersects(e.pairs, ctx.family_sets.outset)) return false;
  for (const auto& pair : ctx.cross_pairs) {
    if (!pair_conditions(e, pair.ctx, ctx.nonterminal)) return false;
  }
  return true;
}

/// Whether `e` can generate the family in the given order: the family
/// interval holds and the pair conditions hold for every cross-connected
/// ordered pair.
inline bool sequence_compatible(const EmbeddingRelation& e, const LabelledGraph& g,
                                const Family& family,
                                const std::vector<std::size_t>& order,
                                const Label& nonterminal = kDefaultNonterminal) {
  return sequence_compatible(e, build_sequence_context(g, family, order, nonterminal));
}

inline bool sequence_compatible(const EmbeddingRelation& e, const LabelledGraph& g,
                                const Family& family,
                                const Label& nonterminal = kDefaultNonterminal) {
  return sequence_compatible(e, g, family, identity_order(family), nonterminal);
}

/// Existence of a compatible relation for the ordered pair (earlier, later),
/// decided from the pair and two-member family sets alone.
inline bool pair_existence(const LabelledGraph& g, const Occurrence& earlier,
                           const Occurrence& later,
                           const Label& nonterminal = kDefaultNonterminal) {
  (void)nonterminal;
  const PairContext ctx = pair_in_out(g, earlier, later);
  const InOutSets fam = family_in_out(g, std::vector<Occurrence>{earlier, later});
  if (sets::intersects(sets::set_union(fam.inset, ctx.adjacent.inset), fam.outset)) {
    return false;
  }
  if (sets::intersects(
          second_labels(ctx.adjacent.inset),
          second_labels(sets::intersection(fam.inset, ctx.full.outset)))) {
    return false;
  }
  return !sets::intersects(ctx.adjacent.inset, ctx.full.outset);
}

inline void require_nonterminal_free(const LabelledGraph& g,
                                     const Label& nonterminal) {
  for (const auto& [id, label] : g.nodes()) {
    if (label == nonterminal) {
      throw InputError("host graph carries the nonterminal label at node " + id);
    }
  }
}

/// Existence of a compatible relation for one fixed order. When the three
/// separation conditions over the order's cross-connected pairs hold, the
/// canonical witness is returned: the family inset, every cross-pair inset,
/// and (x, N) for every second component of those insets. The witness is
/// itself sequence-compatible and contains no pair with the nonterminal as
/// first component.
inline std::optional<EmbeddingRelation> ordering_existence(
    const LabelledGraph& g, const Family& family,
    const std::vector<std::size_t>& order,
    const Label& nonterminal = kDefaultNonterminal) {
  require_nonterminal_free(g, nonterminal);
  const SequenceContext ctx = build_sequence_context(g, family, order, nonterminal);

  std::set<LabelPair> union_inset;
  std::set<LabelPair> union_full_outset;
  for (const auto& pair : ctx.cross_pairs) {
    union_inset.insert(pair.ctx.adjacent.inset.begin(),
                       pair.ctx.adjacent.inset.end());
    union_full_outset.insert(pair.ctx.full.outset.begin(),
                             pair.ctx.full.outset.end());
  }

  if (sets::intersects(sets::set_union(ctx.family_sets.inset, union_inset),
                       ctx.family_sets.outset)) {
    return std::nullopt;
  }
  if (sets::intersects(second_labels(union_inset),
                       second_labels(sets::intersection(ctx.family_sets.inset,
                                                        union_full_outset)))) {
    return std::nullopt;
  }
  if (sets::intersects(union_inset, union_full_outset)) return std::nullopt;

  std::set<LabelPair> pairs = sets::set_union(ctx.family_sets.inset, union_inset);
  for (const Label& x : second_labels(union_inset)) {
    pairs.insert(LabelPair{x, nonterminal});
  }
  return make_embedding(std::move(pairs),
                        default_alphabet(g, family.pattern, nonterminal));
}

}  // namespace nlc

#endif  // NLC_COMPATIBILITY_HPP_
