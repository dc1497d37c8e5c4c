//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Inset/outset computations. For a node-tuple set Q, the inset is the label
// image of the tuples realized as host edges and the outset the label image
// of the rest; the two may overlap. These sets are the "must include" /
// "must exclude" constraints an embedding relation has to satisfy.

#ifndef NLC_INOUT_HPP_
#define NLC_INOUT_HPP_

#include <vector>

#include "nlc/embedding.hpp"
#include "nlc/graph.hpp"
#include "nlc/occurrence.hpp"

namespace nlc {

struct InOutSets {
  std::set<LabelPair> inset;
  std::set<LabelPair> outset;

  bool operator==(const InOutSets&) const = default;
};

/// Partitions Q by edge membership and returns the label images.
inline InOutSets in_out_sets(const LabelledGraph& g,
                             const std::set<NodeTuple>& q) {
  InOutSets out;
  for (const NodeTuple& t : q) {
    if (t.first == t.second) {
      throw InputError("tuple with equal components: (" + t.first + "," +
                       t.second + ")");
    }
    LabelPair pair{g.label(t.first), g.label(t.second)};
    if (g.has_edge(t.first, t.second)) {
      out.inset.insert(pair);
    } else {
      out.outset.insert(pair);
    }
  }
  return out;
}

/// Inset/outset of one occurrence against its whole neighbourhood.
inline InOutSets subgraph_in_out(const LabelledGraph& g, const Occurrence& s) {
  return in_out_sets(
      g, k_tuples(s.host_nodes, neighborhood(g, s.host_nodes)));
}

/// Both tuple-set views of an ordered pair (earlier, later). `adjacent` uses
/// tuples from the later occurrence into the earlier one's part of its
/// neighbourhood; `full` uses all later x earlier tuples.
struct PairContext {
  InOutSets adjacent;
  InOutSets full;
};

inline PairContext pair_in_out(const LabelledGraph& g, const Occurrence& earlier,
                               const Occurrence& later) {
  if (!are_touching(g, earlier.host_nodes, later.host_nodes)) {
    throw InputError("occurrence pair is not touching");
  }
  const std::set<NodeId> reachable = sets::intersection(
      earlier.host_nodes, neighborhood(g, later.host_nodes));
  PairContext ctx;
  ctx.adjacent = in_out_sets(g, k_tuples(later.host_nodes, reachable));
  ctx.full = in_out_sets(g, k_tuples(later.host_nodes, earlier.host_nodes));
  return ctx;
}

/// Family inset/outset: tuples from every occurrence to its outside-world
/// neighbours (neighbours belonging to no occurrence).
inline InOutSets family_in_out(const LabelledGraph& g,
                               const std::vector<Occurrence>& members) {
  std::set<NodeId> occupied;
  for (const Occurrence& occ : members) {
    for (const NodeId& id : occ.host_nodes) {
      if (!occupied.insert(id).second) {
        throw InputError("occurrences overlap at node " + id);
      }
    }
  }
  std::set<NodeTuple> q;
  for (const Occurrence& occ : members) {
    const std::set<NodeId> outside =
        sets::difference(neighborhood(g, occ.host_nodes), occupied);
    const std::set<NodeTuple> part = k_tuples(occ.host_nodes, outside);
    q.insert(part.begin(), part.end());
  }
  return in_out_sets(g, q);
}

inline InOutSets family_in_out(const LabelledGraph& g, const Family& family) {
  return family_in_out(g, family.members);
}

}  // namespace nlc

#endif  // NLC_INOUT_HPP_
