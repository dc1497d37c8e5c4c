//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <catch2/catch_amalgamated.hpp>

#include "nlc/pattern.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace nlc;
using namespace nlc::testing;

TEST_CASE("the square pattern occurs exactly twice in the host") {
  const LabelledGraph host = two_squares_graph();
  const OccurrenceList list = find_occurrences(host, square_pattern());
  REQUIRE(list.occurrences.size() == 2);
  CHECK_FALSE(list.truncated);
  CHECK(list.occurrences[0].host_nodes ==
        std::set<NodeId>{"1:a1", "1:a2", "1:b", "1:c"});
  CHECK(list.occurrences[1].host_nodes ==
        std::set<NodeId>{"2:a1", "2:a2", "2:b", "2:c"});
  for (const Occurrence& occ : list.occurrences) {
    validate_occurrence(host, list.pattern, occ);
  }
}

TEST_CASE("a single a-node pattern finds all four a-nodes") {
  LabelledGraph pattern;
  pattern.add_node("p", Label{"a"});
  const OccurrenceList list = find_occurrences(two_squares_graph(), pattern);
  REQUIRE(list.occurrences.size() == 4);
  std::set<NodeId> found;
  for (const Occurrence& occ : list.occurrences) {
    found.insert(*occ.host_nodes.begin());
  }
  CHECK(found == std::set<NodeId>{"1:a1", "1:a2", "2:a1", "2:a2"});
}

TEST_CASE("absent patterns and bad inputs") {
  LabelledGraph pattern;
  pattern.add_node("p", Label{"z"});
  CHECK(find_occurrences(two_squares_graph(), pattern).occurrences.empty());
  CHECK_THROWS_AS(find_occurrences(two_squares_graph(), LabelledGraph{}),
                  InputError);
  CHECK_THROWS_AS(find_occurrences(two_squares_graph(), pattern, 0), InputError);
}

TEST_CASE("caps truncate and flag the result") {
  LabelledGraph pattern;
  pattern.add_node("p", Label{"a"});
  const OccurrenceList list = find_occurrences(two_squares_graph(), pattern, 2);
  CHECK(list.occurrences.size() == 2);
  CHECK(list.truncated);
}

TEST_CASE("enumeration equals the subset-scan oracle on small graphs") {
  std::mt19937_64 rng(91);
  for (int round = 0; round < 60; ++round) {
    const LabelledGraph g = random_graph(rng, 8, 2);
    LabelledGraph pattern = random_graph(rng, 3, 2);
    if (pattern.node_count() == 0) continue;
    const OccurrenceList list = find_occurrences(g, pattern);
    std::vector<std::set<NodeId>> got;
    for (const Occurrence& occ : list.occurrences) got.push_back(occ.host_nodes);
    std::vector<std::set<NodeId>> expected = occurrence_sets_oracle(g, pattern);
    CHECK(got == expected);
    for (const Occurrence& occ : list.occurrences) {
      validate_occurrence(g, pattern, occ);
    }
  }
}

TEST_CASE("disjoint family assembly over the host squares") {
  const OccurrenceList list =
      find_occurrences(two_squares_graph(), square_pattern());
  const DisjointFamilies pairs = disjoint_families(list, 2);
  REQUIRE(pairs.families.size() == 1);
  CHECK(pairs.families[0] == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(pairs.truncated);

  const DisjointFamilies singles = disjoint_families(list, 1);
  CHECK(singles.families.size() == 2);

  const Family family = make_family_from(list, pairs.families[0]);
  CHECK(family.members.size() == 2);
  validate_family(two_squares_graph(), family);
}

TEST_CASE("overlapping occurrences assemble no family") {
  // Two overlapping edges: p-q and q-r.
  LabelledGraph g;
  g.add_node("p", Label{"a"});
  g.add_node("q", Label{"a"});
  g.add_node("r", Label{"a"});
  g.add_edge("p", "q");
  g.add_edge("q", "r");
  const OccurrenceList list = find_occurrences(g, edge_pattern());
  CHECK(list.occurrences.size() == 2);
  CHECK(disjoint_families(list, 2).families.empty());
}

TEST_CASE("family caps truncate and flag") {
  LabelledGraph g;
  LabelledGraph pattern;
  pattern.add_node("p", Label{"a"});
  for (int i = 0; i < 6; ++i) {
    g.add_node("n" + std::to_string(i), Label{"a"});
  }
  const OccurrenceList list = find_occurrences(g, pattern);
  const DisjointFamilies fams = disjoint_families(list, 2, 3);
  CHECK(fams.families.size() == 3);
  CHECK(fams.truncated);
  CHECK_THROWS_AS(disjoint_families(list, 0), InputError);
}
