//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Seed-keyed random instance generator. Draws a rule, a start graph with the
// requested number of nonterminal nodes, derives it in a random order, and
// emits the result together with the ground-truth occurrences. Every bundle
// re-derives by construction; emission asserts that.

#ifndef NLC_GENERATOR_HPP_
#define NLC_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nlc/skeleton.hpp"

namespace nlc {

struct GenParams {
  std::uint64_t seed = 0;
  int labels = 2;        // terminal alphabet size, 1..8
  int pattern_size = 2;  // right-hand-side node count, 1..6
  int copies = 2;        // nonterminal nodes in the start graph, 0..8
  // Keep the closed neighbourhoods of the nonterminal nodes disjoint, so the
  // generated occurrences are mutually non-touching.
  bool non_touching = false;
};

struct GenBundle {
  LabelledGraph graph;
  Family family;
  NlcRule rule;
  std::vector<std::size_t> order;  // identity: members are listed in creation order
  LabelledGraph start;             // the contracted-skeleton-equal start graph
};

namespace detail {

// Deterministic across platforms: raw mt19937_64 draws with rejection
// sampling, no standard-library distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = state_();
    } while (r >= bound);
    return r % n;
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return uniform(den) < num; }

 private:
  std::mt19937_64 state_;
};

inline std::vector<Label> terminal_alphabet(int k) {
  std::vector<Label> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(Label{std::string(1, static_cast<char>('a' + i))});
  }
  return out;
}

}  // namespace detail

inline GenBundle generate_instance(const GenParams& params,
                                   const Label& nonterminal = kDefaultNonterminal) {
  if (params.labels < 1 || params.labels > 8) {
    throw InputError("labels must lie in 1..8");
  }
  if (params.pattern_size < 1 || params.pattern_size > 6) {
    throw InputError("pattern-size must lie in 1..6");
  }
  if (params.copies < 0 || params.copies > 8) {
    throw InputError("copies must lie in 0..8");
  }

  detail::SeededRng rng(params.seed);
  const std::vector<Label> terminals = detail::terminal_alphabet(params.labels);

  LabelledGraph rhs;
  std::vector<NodeId> rhs_ids;
  for (int i = 0; i < params.pattern_size; ++i) {
    NodeId id = "p" + std::to_string(i + 1);
    rhs.add_node(id, terminals[rng.uniform(terminals.size())]);
    rhs_ids.push_back(id);
  }
  for (std::size_t i = 0; i < rhs_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < rhs_ids.size(); ++j) {
      if (rng.chance(1, 2)) rhs.add_edge(rhs_ids[i], rhs_ids[j]);
    }
  }

  std::set<Label> alphabet(terminals.begin(), terminals.end());
  alphabet.insert(nonterminal);
  std::set<LabelPair> pairs;
  for (const Label& x : terminals) {
    for (const Label& y : terminals) {
      if (rng.chance(1, 3)) pairs.insert(LabelPair{x, y});
    }
    // Biased towards reconnection pairs so touching-specific paths fire often.
    if (rng.chance(1, 2)) pairs.insert(LabelPair{x, nonterminal});
  }
  NlcRule rule = make_rule(nonterminal, rhs, make_embedding(pairs, alphabet));

  LabelledGraph start;
  std::vector<NodeId> replace_sites;
  for (int i = 0; i < params.copies; ++i) {
    NodeId id = "v" + std::to_string(i + 1);
    start.add_node(id, nonterminal);
    replace_sites.push_back(id);
  }
  const std::uint64_t outside_count = rng.uniform(4);  // 0..3 outside nodes
  std::vector<NodeId> outside;
  for (std::uint64_t i = 0; i < outside_count; ++i) {
    NodeId id = "w" + std::to_string(i + 1);
    start.add_node(id, terminals[rng.uniform(terminals.size())]);
    outside.push_back(id);
  }
  if (params.non_touching) {
    // Each outside node attaches to at most one nonterminal; no edges among
    // the nonterminals.
    for (const NodeId& w : outside) {
      const std::uint64_t owner = rng.uniform(replace_sites.size() + 1);
      if (owner < replace_sites.size()) start.add_edge(replace_sites[owner], w);
    }
  } else {
    for (std::size_t i = 0; i < replace_sites.size(); ++i) {
      for (std::size_t j = i + 1; j < replace_sites.size(); ++j) {
        if (rng.chance(1, 2)) start.add_edge(replace_sites[i], replace_sites[j]);
      }
    }
    for (const NodeId& v : replace_sites) {
      for (const NodeId& w : outside) {
        if (rng.chance(1, 2)) start.add_edge(v, w);
      }
    }
  }
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      if (rng.chance(1, 2)) start.add_edge(outside[i], outside[j]);
    }
  }

  // Replace the nonterminals in a random order; default naming makes step i
  // create nodes "i:<pattern-id>".
  std::vector<NodeId> replacement_order = replace_sites;
  for (std::size_t i = replacement_order.size(); i > 1; --i) {
    std::swap(replacement_order[i - 1], replacement_order[rng.uniform(i)]);
  }

  GenBundle bundle;
  bundle.rule = rule;
  bundle.start = start;
  DerivationTrace trace = derive(start, rule, replacement_order);
  bundle.graph = trace.result;

  bundle.family.pattern = rhs;
  for (std::size_t step = 0; step < trace.steps.size(); ++step) {
    Occurrence occ;
    occ.embedding = trace.steps[step].copy_map;
    for (const auto& [p, h] : occ.embedding) occ.host_nodes.insert(h);
    bundle.family.members.push_back(std::move(occ));
  }
  bundle.order = identity_order(bundle.family);

  const VerifyResult check = verify_forward(bundle.graph, bundle.family,
                                            bundle.order, rule.embedding,
                                            nonterminal);
  if (!check.ok) {
    throw std::logic_error("generator self-check failed: " + check.diagnostic);
  }
  return bundle;
}

}  // namespace nlc

#endif  // NLC_GENERATOR_HPP_
