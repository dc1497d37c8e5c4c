//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Labelled simple graphs and the small set-level operations everything else
// is built from: neighbourhoods, induced subgraphs, touching tests and
// node-tuple sets.

#ifndef NLC_GRAPH_HPP_
#define NLC_GRAPH_HPP_

#include <cctype>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "nlc/error.hpp"
#include "nlc/set_ops.hpp"

namespace nlc {

/// Node identifiers are opaque tokens; all set outputs are emitted in
/// lexicographic identifier order so results are deterministic.
using NodeId = std::string;

/// A node label. Symbols are non-empty tokens of printable characters with
/// no whitespace; equality is exact symbol equality.
struct Label {
  std::string name;

  auto operator<=>(const Label&) const = default;
};

/// The conventional nonterminal symbol. The actual nonterminal of a rule is
/// configurable; this is only the default.
inline const Label kDefaultNonterminal{"N"};

inline bool valid_label_symbol(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (!std::isprint(c) || std::isspace(c)) return false;
  }
  return true;
}

inline void require_label_symbol(const std::string& s) {
  if (!valid_label_symbol(s)) {
    throw ValidationError("invalid label symbol: \"" + s +
                          "\" (labels are non-empty, printable, no whitespace)");
  }
}

/// An ordered pair of nodes, as drawn from K_{W1,W2} of two disjoint node
/// sets; components are distinct whenever produced that way.
struct NodeTuple {
  NodeId first;
  NodeId second;

  auto operator<=>(const NodeTuple&) const = default;
};

/// A finite simple undirected graph with a total node -> label mapping.
/// No loops, no parallel edges; edge endpoints are always members.
class LabelledGraph {
 public:
  LabelledGraph() = default;

  void add_node(const NodeId& id, const Label& label) {
    if (id.empty()) throw ValidationError("empty node identifier");
    require_label_symbol(label.name);
    if (labels_.count(id) > 0) {
      throw ValidationError("duplicate node identifier: " + id);
    }
    labels_.emplace(id, label);
    adjacency_.emplace(id, std::set<NodeId>{});
  }

  void add_edge(const NodeId& a, const NodeId& b) {
    if (a == b) throw ValidationError("loop edge on node " + a);
    require_node(a);
    require_node(b);
    edges_.insert(ordered(a, b));
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
  }

  /// Removes a node together with its incident edges.
  void remove_node(const NodeId& id) {
    require_node(id);
    for (const NodeId& other : adjacency_[id]) {
      adjacency_[other].erase(id);
      edges_.erase(ordered(id, other));
    }
    adjacency_.erase(id);
    labels_.erase(id);
  }

  bool has_node(const NodeId& id) const { return labels_.count(id) > 0; }

  bool has_edge(const NodeId& a, const NodeId& b) const {
    return edges_.count(ordered(a, b)) > 0;
  }

  const Label& label(const NodeId& id) const {
    auto it = labels_.find(id);
    if (it == labels_.end()) throw InputError("unknown node identifier: " + id);
    return it->second;
  }

  const std::set<NodeId>& neighbors(const NodeId& id) const {
    auto it = adjacency_.find(id);
    if (it == adjacency_.end()) throw InputError("unknown node identifier: " + id);
    return it->second;
  }

  const std::map<NodeId, Label>& nodes() const { return labels_; }

  const std::set<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

  std::set<NodeId> node_set() const {
    std::set<NodeId> out;
    for (const auto& [id, label] : labels_) out.insert(id);
    return out;
  }

  std::set<Label> label_set() const {
    std::set<Label> out;
    for (const auto& [id, label] : labels_) out.insert(label);
    return out;
  }

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool operator==(const LabelledGraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  static std::pair<NodeId, NodeId> ordered(const NodeId& a, const NodeId& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  }

  void require_node(const NodeId& id) const {
    if (labels_.count(id) == 0) {
      throw InputError("unknown node identifier: " + id);
    }
  }

  std::map<NodeId, Label> labels_;
  std::map<NodeId, std::set<NodeId>> adjacency_;
  std::set<std::pair<NodeId, NodeId>> edges_;
};

inline void require_nodes_exist(const LabelledGraph& g,
                                const std::set<NodeId>& w) {
  for (const NodeId& id : w) {
    if (!g.has_node(id)) throw InputError("unknown node identifier: " + id);
  }
}

/// N_G(W): all nodes outside W adjacent to some node of W.
inline std::set<NodeId> neighborhood(const LabelledGraph& g,
                                     const std::set<NodeId>& w) {
  require_nodes_exist(g, w);
  std::set<NodeId> out;
  for (const NodeId& id : w) {
    for (const NodeId& v : g.neighbors(id)) {
      if (!sets::contains(w, v)) out.insert(v);
    }
  }
  return out;
}

/// The graph on W keeping exactly the edges of g inside W, labels inherited.
inline LabelledGraph induced_subgraph(const LabelledGraph& g,
                                      const std::set<NodeId>& w) {
  require_nodes_exist(g, w);
  LabelledGraph out;
  for (const NodeId& id : w) out.add_node(id, g.label(id));
  for (const NodeId& id : w) {
    for (const NodeId& v : g.neighbors(id)) {
      if (id < v && sets::contains(w, v)) out.add_edge(id, v);
    }
  }
  return out;
}

/// Whether there is at least one host edge between the two node sets.
inline bool cross_connected(const LabelledGraph& g, const std::set<NodeId>& w1,
                            const std::set<NodeId>& w2) {
  for (const NodeId& id : w1) {
    if (sets::intersects(g.neighbors(id), w2)) return true;
  }
  return false;
}

/// True iff the closed neighbourhoods of the two disjoint sets intersect:
/// a cross edge or a shared outside neighbour both count.
inline bool are_touching(const LabelledGraph& g, const std::set<NodeId>& w1,
                         const std::set<NodeId>& w2) {
  if (sets::intersects(w1, w2)) {
    throw InputError("node sets overlap; touching is defined for disjoint sets");
  }
  require_nodes_exist(g, w1);
  require_nodes_exist(g, w2);
  const std::set<NodeId> closed1 = sets::set_union(w1, neighborhood(g, w1));
  const std::set<NodeId> closed2 = sets::set_union(w2, neighborhood(g, w2));
  return sets::intersects(closed1, closed2);
}

/// K_{W1,W2}: all tuples with the left element from W1 and the right from W2.
inline std::set<NodeTuple> k_tuples(const std::set<NodeId>& w1,
                                    const std::set<NodeId>& w2) {
  if (sets::intersects(w1, w2)) {
    throw InputError("node sets overlap; tuple sets require disjoint sets");
  }
  std::set<NodeTuple> out;
  for (const NodeId& a : w1) {
    for (const NodeId& b : w2) out.insert(NodeTuple{a, b});
  }
  return out;
}

}  // namespace nlc

#endif  // NLC_GRAPH_HPP_
