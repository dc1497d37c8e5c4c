//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Shared builders for the running example and the negative instance.

#ifndef NLC_TESTS_FIXTURES_HPP_
#define NLC_TESTS_FIXTURES_HPP_

#include "nlc/occurrence.hpp"
#include "nlc/rule.hpp"

namespace nlc::testing {

// Start graph: one b-node attached to a chain of two nonterminals.
inline LabelledGraph start_graph() {
  LabelledGraph g;
  g.add_node("bT", Label{"b"});
  g.add_node("n1", Label{"N"});
  g.add_node("n2", Label{"N"});
  g.add_edge("bT", "n1");
  g.add_edge("n1", "n2");
  return g;
}

// The square pattern: a1-a2-c-b-a1 with labels a,a,c,b.
inline LabelledGraph square_pattern() {
  LabelledGraph s;
  s.add_node("a1", Label{"a"});
  s.add_node("a2", Label{"a"});
  s.add_node("b", Label{"b"});
  s.add_node("c", Label{"c"});
  s.add_edge("a1", "a2");
  s.add_edge("a2", "c");
  s.add_edge("c", "b");
  s.add_edge("b", "a1");
  return s;
}

inline std::set<LabelPair> pairs_of(
    std::initializer_list<std::pair<const char*, const char*>> items) {
  std::set<LabelPair> out;
  for (const auto& [x, y] : items) out.insert(LabelPair{Label{x}, Label{y}});
  return out;
}

inline std::set<Label> abcN_alphabet() {
  return {Label{"a"}, Label{"b"}, Label{"c"}, Label{"N"}};
}

// E compatible for creating the bT-adjacent square first.
inline EmbeddingRelation square_relation() {
  return make_embedding(
      pairs_of({{"a", "b"}, {"b", "a"}, {"c", "c"}, {"a", "N"}, {"c", "N"}}),
      abcN_alphabet());
}

// E compatible for the reverse creation order.
inline EmbeddingRelation reverse_square_relation() {
  return make_embedding(pairs_of({{"a", "b"}, {"c", "c"}, {"b", "N"}, {"c", "N"}}),
                        abcN_alphabet());
}

inline NlcRule square_rule() {
  return make_rule(Label{"N"}, square_pattern(), square_relation());
}

// The terminal graph obtained by replacing n1 then n2: two squares, the
// first one hanging off the b-node, joined by three cross edges. Node names
// follow the default copy naming, so this equals the derive() output.
inline LabelledGraph two_squares_graph() {
  LabelledGraph g;
  g.add_node("bT", Label{"b"});
  for (const char* prefix : {"1:", "2:"}) {
    const std::string p(prefix);
    g.add_node(p + "a1", Label{"a"});
    g.add_node(p + "a2", Label{"a"});
    g.add_node(p + "b", Label{"b"});
    g.add_node(p + "c", Label{"c"});
    g.add_edge(p + "a1", p + "a2");
    g.add_edge(p + "a2", p + "c");
    g.add_edge(p + "c", p + "b");
    g.add_edge(p + "b", p + "a1");
  }
  g.add_edge("bT", "1:a1");
  g.add_edge("bT", "1:a2");
  g.add_edge("2:b", "1:a1");
  g.add_edge("2:b", "1:a2");
  g.add_edge("2:c", "1:c");
  return g;
}

inline Occurrence square_occurrence(const std::string& prefix) {
  std::map<NodeId, NodeId> embedding;
  for (const char* p : {"a1", "a2", "b", "c"}) {
    embedding.emplace(p, prefix + p);
  }
  std::set<NodeId> nodes;
  for (const auto& [p, h] : embedding) nodes.insert(h);
  Occurrence occ{nodes, embedding};
  return occ;
}

// Family over two_squares_graph(): member 0 is the b-adjacent square.
inline Family two_squares_family() {
  Family family;
  family.pattern = square_pattern();
  family.members.push_back(square_occurrence("1:"));
  family.members.push_back(square_occurrence("2:"));
  validate_family(two_squares_graph(), family);
  return family;
}

// Four nodes labelled a with edges p-q, r-s, p-r; no single relation can
// generate the two edge occurrences in either order.
inline LabelledGraph conflict_graph() {
  LabelledGraph g;
  g.add_node("p", Label{"a"});
  g.add_node("q", Label{"a"});
  g.add_node("r", Label{"a"});
  g.add_node("s", Label{"a"});
  g.add_edge("p", "q");
  g.add_edge("r", "s");
  g.add_edge("p", "r");
  return g;
}

inline LabelledGraph edge_pattern() {
  LabelledGraph s;
  s.add_node("x", Label{"a"});
  s.add_node("y", Label{"a"});
  s.add_edge("x", "y");
  return s;
}

inline Family conflict_family() {
  Family family;
  family.pattern = edge_pattern();
  const LabelledGraph host = conflict_graph();
  family.members.push_back(
      make_occurrence(host, family.pattern, {"p", "q"}));
  family.members.push_back(
      make_occurrence(host, family.pattern, {"r", "s"}));
  return family;
}

}  // namespace nlc::testing

#endif  // NLC_TESTS_FIXTURES_HPP_
