//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Rule application semantics. Replacing a nonterminal-labelled node v removes
// v with its incident edges, inserts a fresh copy of the right-hand side, and
// joins copy node x to former neighbour y of v iff (label(x), label(y)) is in
// the embedding relation. Reconnection ranges over the neighbours of the
// replaced node at application time.

#ifndef NLC_RULE_HPP_
#define NLC_RULE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlc/embedding.hpp"
#include "nlc/graph.hpp"

namespace nlc {

/// A rule nonterminal -> rhs / embedding. The right-hand side never carries
/// the nonterminal label, so derivations terminate.
struct NlcRule {
  Label nonterminal;
  LabelledGraph rhs;
  EmbeddingRelation embedding;
};

inline NlcRule make_rule(Label nonterminal, LabelledGraph rhs,
                         EmbeddingRelation embedding) {
  require_label_symbol(nonterminal.name);
  for (const auto& [id, label] : rhs.nodes()) {
    if (label == nonterminal) {
      throw ValidationError("right-hand side node " + id +
                            " carries the nonterminal label");
    }
  }
  if (!sets::contains(embedding.alphabet, nonterminal)) {
    throw ValidationError("embedding alphabet lacks the nonterminal");
  }
  for (const Label& l : rhs.label_set()) {
    if (!sets::contains(embedding.alphabet, l)) {
      throw ValidationError("right-hand side label " + l.name +
                            " falls outside the alphabet");
    }
  }
  return NlcRule{std::move(nonterminal), std::move(rhs), std::move(embedding)};
}

/// Pairs with the nonterminal as first component are accepted but inert: the
/// right-hand side has no nonterminal-labelled node to activate them.
inline std::vector<std::string> rule_warnings(const NlcRule& rule) {
  std::vector<std::string> out;
  for (const LabelPair& p : rule.embedding.pairs) {
    if (p.first == rule.nonterminal) {
      out.push_back("embedding pair (" + p.first.name + "," + p.second.name +
                    ") is inert: the right-hand side has no " +
                    rule.nonterminal.name + "-labelled node");
    }
  }
  return out;
}

/// Names for the inserted copy, keyed by right-hand-side node.
using CopyMap = std::map<NodeId, NodeId>;

/// Default fresh naming "<k>:<pattern-node-id>" with the smallest k that is
/// fresh in g minus the replaced node; repeated applications therefore number
/// their copies 1:, 2:, ... in application order.
inline CopyMap default_copy_map(const LabelledGraph& g, const LabelledGraph& rhs,
                                const NodeId& replaced) {
  for (std::size_t k = 1;; ++k) {
    CopyMap out;
    bool fresh = true;
    for (const auto& [id, label] : rhs.nodes()) {
      NodeId name = std::to_string(k) + ":" + id;
      if (g.has_node(name) && name != replaced) {
        fresh = false;
        break;
      }
      out.emplace(id, name);
    }
    if (fresh) return out;
  }
}

/// Applies `rule` at node v of g. Supplied copy names must be fresh in
/// g minus v and cover the right-hand side exactly.
inline LabelledGraph apply_rule(const LabelledGraph& g, const NlcRule& rule,
                                const NodeId& v,
                                const std::optional<CopyMap>& copy_map = std::nullopt) {
  if (!g.has_node(v)) throw InputError("unknown node identifier: " + v);
  if (g.label(v) != rule.nonterminal) {
    throw InputError("node " + v + " is not labelled with the nonterminal " +
                     rule.nonterminal.name);
  }

  const std::set<NodeId> former_neighbors = g.neighbors(v);
  LabelledGraph out = g;
  out.remove_node(v);

  CopyMap names = copy_map.has_value() ? *copy_map
                                       : default_copy_map(g, rule.rhs, v);
  if (names.size() != rule.rhs.node_count()) {
    throw InputError("copy naming does not cover the right-hand side");
  }
  std::set<NodeId> fresh;
  for (const auto& [p, name] : names) {
    if (!rule.rhs.has_node(p)) {
      throw InputError("copy naming refers to unknown right-hand-side node " + p);
    }
    if (out.has_node(name) || !fresh.insert(name).second) {
      throw InputError("copy name collision: " + name);
    }
  }

  for (const auto& [p, label] : rule.rhs.nodes()) out.add_node(names.at(p), label);
  for (const auto& [p1, p2] : rule.rhs.edges()) {
    out.add_edge(names.at(p1), names.at(p2));
  }
  for (const auto& [p, label] : rule.rhs.nodes()) {
    for (const NodeId& y : former_neighbors) {
      if (rule.embedding.contains(label, out.label(y))) {
        out.add_edge(names.at(p), y);
      }
    }
  }
  return out;
}

struct DerivationStep {
  NodeId replaced;
  CopyMap copy_map;
};

struct DerivationTrace {
  std::vector<DerivationStep> steps;
  LabelledGraph result;
};

/// Folds apply_rule left to right over `order`. Step failures are reported
/// with their (1-based) step index.
inline DerivationTrace derive(const LabelledGraph& g, const NlcRule& rule,
                              const std::vector<NodeId>& order,
                              const std::vector<CopyMap>* copy_maps = nullptr) {
  if (copy_maps != nullptr && copy_maps->size() != order.size()) {
    throw InputError("copy naming list does not match the order length");
  }
  DerivationTrace trace;
  trace.result = g;
  for (std::size_t i = 0; i < order.size(); ++i) {
    CopyMap names = copy_maps != nullptr
                        ? (*copy_maps)[i]
                        : default_copy_map(trace.result, rule.rhs, order[i]);
    try {
      trace.result = apply_rule(trace.result, rule, order[i], names);
    } catch (const InputError& e) {
      throw InputError("step " + std::to_string(i + 1) + ": " + e.what());
    }
    trace.steps.push_back(DerivationStep{order[i], std::move(names)});
  }
  return trace;
}

}  // namespace nlc

#endif  // NLC_RULE_HPP_
