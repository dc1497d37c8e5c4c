//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef NLC_EMBEDDING_HPP_
#define NLC_EMBEDDING_HPP_

#include <set>
#include <string>

#include "nlc/graph.hpp"

namespace nlc {

/// An ordered pair of labels; the elements of embedding relations and of
/// inset/outset values.
struct LabelPair {
  Label first;
  Label second;

  auto operator<=>(const LabelPair&) const = default;
};

/// The embedding relation of a rule: a set of ordered label pairs over an
/// alphabet that contains the nonterminal. After a replacement, a created
/// node x is joined to a former neighbour y of the replaced node iff
/// (label(x), label(y)) is in the relation.
struct EmbeddingRelation {
  std::set<LabelPair> pairs;
  std::set<Label> alphabet;

  bool contains(const Label& a, const Label& b) const {
    return pairs.count(LabelPair{a, b}) > 0;
  }
  bool contains(const LabelPair& p) const { return pairs.count(p) > 0; }

  bool operator==(const EmbeddingRelation&) const = default;
};

/// Validates pairs against the alphabet and returns the relation.
inline EmbeddingRelation make_embedding(std::set<LabelPair> pairs,
                                        std::set<Label> alphabet) {
  for (const Label& l : alphabet) require_label_symbol(l.name);
  for (const LabelPair& p : pairs) {
    if (!sets::contains(alphabet, p.first) ||
        !sets::contains(alphabet, p.second)) {
      throw ValidationError("embedding pair (" + p.first.name + "," +
                            p.second.name + ") falls outside the alphabet");
    }
  }
  return EmbeddingRelation{std::move(pairs), std::move(alphabet)};
}

/// Default alphabet: labels occurring in the two graphs plus the nonterminal.
inline std::set<Label> default_alphabet(const LabelledGraph& g,
                                        const LabelledGraph& rhs,
                                        const Label& nonterminal) {
  std::set<Label> out = g.label_set();
  for (const Label& l : rhs.label_set()) out.insert(l);
  out.insert(nonterminal);
  return out;
}

/// Second components of a pair set (the pi_2 image).
inline std::set<Label> second_labels(const std::set<LabelPair>& pairs) {
  std::set<Label> out;
  for (const LabelPair& p : pairs) out.insert(p.second);
  return out;
}

}  // namespace nlc

#endif  // NLC_EMBEDDING_HPP_
