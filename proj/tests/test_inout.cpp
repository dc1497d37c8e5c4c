//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <catch2/catch_amalgamated.hpp>

#include "nlc/generator.hpp"
#include "nlc/inout.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace nlc;
using namespace nlc::testing;

namespace {

const LabelledGraph kHost = two_squares_graph();
const Family kFamily = two_squares_family();

}  // namespace

TEST_CASE("single-occurrence sets of the second square") {
  const InOutSets io = subgraph_in_out(kHost, kFamily.members[1]);
  CHECK(io.inset == pairs_of({{"b", "a"}, {"c", "c"}}));
  CHECK(io.outset == pairs_of({{"a", "a"}, {"a", "c"}, {"c", "a"}, {"b", "c"}}));
}

TEST_CASE("in_out_sets edge cases") {
  CHECK(in_out_sets(kHost, {}) == InOutSets{});
  CHECK_THROWS_AS(in_out_sets(kHost, {NodeTuple{"bT", "bT"}}), InputError);
  CHECK_THROWS_AS(in_out_sets(kHost, {NodeTuple{"bT", "ghost"}}), InputError);

  LabelledGraph lonely;
  lonely.add_node("u", Label{"a"});
  LabelledGraph pattern;
  pattern.add_node("p", Label{"a"});
  const Occurrence occ = make_occurrence(lonely, pattern, {"u"});
  CHECK(subgraph_in_out(lonely, occ) == InOutSets{});
}

TEST_CASE("in_out_sets matches the definitional scan on random inputs") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 150; ++round) {
    const LabelledGraph g = random_graph(rng, 8, 3);
    if (g.node_count() < 2) continue;
    const std::set<NodeId> w1 = random_subset(rng, g.node_set());
    const std::set<NodeId> w2 =
        random_subset(rng, sets::difference(g.node_set(), w1));
    const std::set<NodeTuple> q = k_tuples(w1, w2);
    const auto [inset, outset] = in_out_oracle(g, q);
    const InOutSets got = in_out_sets(g, q);
    CHECK(got.inset == inset);
    CHECK(got.outset == outset);
  }
}

TEST_CASE("subgraph_in_out composes from explicit tuple sets") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    GenParams params;
    params.seed = seed;
    params.copies = 2;
    params.pattern_size = 2;
    const GenBundle bundle = generate_instance(params);
    for (const Occurrence& occ : bundle.family.members) {
      const std::set<NodeTuple> q = k_tuples(
          occ.host_nodes, neighborhood(bundle.graph, occ.host_nodes));
      CHECK(subgraph_in_out(bundle.graph, occ) == in_out_sets(bundle.graph, q));
    }
  }
}

TEST_CASE("ordered pair sets of the running example") {
  const PairContext forward = pair_in_out(kHost, kFamily.members[0], kFamily.members[1]);
  CHECK(forward.adjacent.inset == pairs_of({{"b", "a"}, {"c", "c"}}));
  CHECK(forward.adjacent.outset ==
        pairs_of({{"a", "a"}, {"a", "c"}, {"b", "c"}, {"c", "a"}}));
  // The full outset is every terminal pair except the inset.
  std::set<LabelPair> all_but_inset;
  for (const char* x : {"a", "b", "c"}) {
    for (const char* y : {"a", "b", "c"}) all_but_inset.insert({Label{x}, Label{y}});
  }
  all_but_inset = sets::difference(all_but_inset, forward.adjacent.inset);
  CHECK(forward.full.outset == all_but_inset);
  CHECK(forward.full.inset == forward.adjacent.inset);

  const PairContext backward = pair_in_out(kHost, kFamily.members[1], kFamily.members[0]);
  CHECK(backward.adjacent.inset == pairs_of({{"a", "b"}, {"c", "c"}}));
  CHECK(backward.adjacent.outset ==
        pairs_of({{"a", "c"}, {"b", "b"}, {"b", "c"}, {"c", "b"}}));
}

TEST_CASE("a single joined node pair has a one-pair inset") {
  LabelledGraph g;
  g.add_node("x", Label{"p"});
  g.add_node("y", Label{"q"});
  g.add_edge("x", "y");
  LabelledGraph pattern;
  pattern.add_node("n", Label{"p"});
  LabelledGraph pattern_q;
  pattern_q.add_node("n", Label{"q"});
  const Occurrence sx = make_occurrence(g, pattern, {"x"});
  const Occurrence sy = make_occurrence(g, pattern_q, {"y"});

  const PairContext ctx = pair_in_out(g, sx, sy);
  CHECK(ctx.adjacent.inset == pairs_of({{"q", "p"}}));
  CHECK(ctx.adjacent.outset.empty());
}

TEST_CASE("pair sets require a touching pair") {
  LabelledGraph g;
  g.add_node("x", Label{"a"});
  g.add_node("y", Label{"a"});
  LabelledGraph pattern;
  pattern.add_node("p", Label{"a"});
  const Occurrence sx = make_occurrence(g, pattern, {"x"});
  const Occurrence sy = make_occurrence(g, pattern, {"y"});
  CHECK_THROWS_AS(pair_in_out(g, sx, sy), InputError);
}

TEST_CASE("family sets of the running example") {
  const InOutSets fam = family_in_out(kHost, kFamily);
  CHECK(fam.inset == pairs_of({{"a", "b"}}));
  CHECK(fam.outset == pairs_of({{"b", "b"}, {"c", "b"}}));
}

TEST_CASE("family sets degenerate to unions for non-touching members") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenParams params;
    params.seed = seed;
    params.copies = 2 + static_cast<int>(seed % 2);
    params.non_touching = true;
    const GenBundle bundle = generate_instance(params);
    InOutSets expected;
    for (const Occurrence& occ : bundle.family.members) {
      const InOutSets single = subgraph_in_out(bundle.graph, occ);
      expected.inset.insert(single.inset.begin(), single.inset.end());
      expected.outset.insert(single.outset.begin(), single.outset.end());
    }
    CHECK(family_in_out(bundle.graph, bundle.family) == expected);
  }
}

TEST_CASE("family sets reject overlap and accept the empty family") {
  CHECK(family_in_out(kHost, std::vector<Occurrence>{}) == InOutSets{});
  std::vector<Occurrence> twice{kFamily.members[0], kFamily.members[0]};
  CHECK_THROWS_AS(family_in_out(kHost, twice), InputError);
}

TEST_CASE("pair-set identities hold on generated touching pairs") {
  int pairs_checked = 0;
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    GenParams params;
    params.seed = seed;
    params.labels = 1 + static_cast<int>(seed % 3);
    params.pattern_size = 1 + static_cast<int>(seed % 3);
    params.copies = 2 + static_cast<int>(seed % 2);
    const GenBundle bundle = generate_instance(params);
    const auto& members = bundle.family.members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        if (!are_touching(bundle.graph, members[i].host_nodes,
                          members[j].host_nodes)) {
          continue;
        }
        ++pairs_checked;
        const PairContext fwd = pair_in_out(bundle.graph, members[i], members[j]);
        const PairContext rev = pair_in_out(bundle.graph, members[j], members[i]);

        // Adjacent and full insets coincide.
        CHECK(fwd.adjacent.inset == fwd.full.inset);
        // The adjacent outset is contained in the full one.
        CHECK(sets::is_subset(fwd.adjacent.outset, fwd.full.outset));
        // The full-set difference is the label image of the unreachable
        // rectangle.
        const std::set<NodeId> unreachable = sets::difference(
            members[i].host_nodes,
            neighborhood(bundle.graph, members[j].host_nodes));
        std::set<LabelPair> rectangle;
        for (const NodeTuple& t : k_tuples(members[j].host_nodes, unreachable)) {
          rectangle.insert(LabelPair{bundle.graph.label(t.first),
                                     bundle.graph.label(t.second)});
        }
        CHECK(sets::difference(fwd.full.outset, fwd.adjacent.outset) == rectangle);
        // Second components of the inset are the labels of the reachable part.
        std::set<Label> reachable_labels;
        for (const NodeId& id : sets::intersection(
                 members[i].host_nodes,
                 neighborhood(bundle.graph, members[j].host_nodes))) {
          reachable_labels.insert(bundle.graph.label(id));
        }
        CHECK(second_labels(fwd.adjacent.inset) == reachable_labels);
        // Full-set reversal symmetry.
        std::set<LabelPair> reversed;
        for (const LabelPair& p : rev.full.inset) {
          reversed.insert(LabelPair{p.second, p.first});
        }
        CHECK(reversed == fwd.full.inset);
      }
    }
  }
  CHECK(pairs_checked > 20);
}
