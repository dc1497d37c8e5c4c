//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// JSON document formats for graphs, rules and occurrence families, plus DOT
// export. Serialization is canonical: object keys, node lists, edge pairs
// and pair lists are all emitted sorted, so serialize(parse(x)) is a fixed
// point and equal values serialize identically.

#ifndef NLC_IO_HPP_
#define NLC_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlc/occurrence.hpp"
#include "nlc/rule.hpp"

namespace nlc::io {

using json = nlohmann::json;

struct GraphDocument {
  LabelledGraph graph;
  std::set<Label> alphabet;  // optional; empty means "not declared"
};

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing key \"" + key + "\"");
  return *it;
}

inline const json* optional_member(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

inline void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
}

inline void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
}

inline std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a string");
  return j.get<std::string>();
}

inline void reject_unknown_keys(const json& j, const std::string& path,
                                std::initializer_list<const char*> known) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ParseError(path + ": unknown key \"" + it.key() + "\"");
  }
}

}  // namespace detail

inline GraphDocument graph_from_json(const json& j, const std::string& path) {
  detail::expect_object(j, path);
  detail::reject_unknown_keys(j, path, {"alphabet", "nodes", "edges"});
  GraphDocument doc;

  if (const json* alpha = detail::optional_member(j, "alphabet")) {
    detail::expect_array(*alpha, path + ".alphabet");
    for (std::size_t i = 0; i < alpha->size(); ++i) {
      const std::string item_path = path + ".alphabet[" + std::to_string(i) + "]";
      Label l{detail::expect_string((*alpha)[i], item_path)};
      require_label_symbol(l.name);
      if (!doc.alphabet.insert(l).second) {
        throw ValidationError(item_path + ": duplicate alphabet symbol " + l.name);
      }
    }
  }

  const json& nodes = detail::member(j, "nodes", path);
  detail::expect_array(nodes, path + ".nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string node_path = path + ".nodes[" + std::to_string(i) + "]";
    detail::expect_object(nodes[i], node_path);
    detail::reject_unknown_keys(nodes[i], node_path, {"id", "label"});
    const std::string id =
        detail::expect_string(detail::member(nodes[i], "id", node_path),
                              node_path + ".id");
    const std::string label =
        detail::expect_string(detail::member(nodes[i], "label", node_path),
                              node_path + ".label");
    doc.graph.add_node(id, Label{label});
  }

  const json& edges = detail::member(j, "edges", path);
  detail::expect_array(edges, path + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string edge_path = path + ".edges[" + std::to_string(i) + "]";
    detail::expect_array(edges[i], edge_path);
    if (edges[i].size() != 2) {
      throw ParseError(edge_path + ": expected a pair of node identifiers");
    }
    const std::string a = detail::expect_string(edges[i][0], edge_path + "[0]");
    const std::string b = detail::expect_string(edges[i][1], edge_path + "[1]");
    if (!doc.graph.has_node(a)) {
      throw ValidationError(edge_path + ": edge references undeclared node " + a);
    }
    if (!doc.graph.has_node(b)) {
      throw ValidationError(edge_path + ": edge references undeclared node " + b);
    }
    if (a == b) throw ValidationError(edge_path + ": self-edge on node " + a);
    if (doc.graph.has_edge(a, b)) {
      throw ValidationError(edge_path + ": duplicate edge (" + a + "," + b + ")");
    }
    doc.graph.add_edge(a, b);
  }

  if (!doc.alphabet.empty()) {
    for (const Label& l : doc.graph.label_set()) {
      if (!sets::contains(doc.alphabet, l)) {
        throw ValidationError(path + ": node label " + l.name +
                              " missing from the declared alphabet");
      }
    }
  }
  return doc;
}

inline json graph_to_json(const GraphDocument& doc) {
  json j = json::object();
  if (!doc.alphabet.empty()) {
    json alpha = json::array();
    for (const Label& l : doc.alphabet) alpha.push_back(l.name);
    j["alphabet"] = std::move(alpha);
  }
  json nodes = json::array();
  for (const auto& [id, label] : doc.graph.nodes()) {
    nodes.push_back(json{{"id", id}, {"label", label.name}});
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [a, b] : doc.graph.edges()) {
    edges.push_back(json::array({a, b}));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline GraphDocument parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(j, "$");
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline std::string serialize_graph(const GraphDocument& doc) {
  return dump_canonical(graph_to_json(doc));
}

inline NlcRule rule_from_json(const json& j, const std::string& path) {
  detail::expect_object(j, path);
  detail::reject_unknown_keys(j, path, {"nonterminal", "rhs", "embedding"});
  const std::string nonterminal = detail::expect_string(
      detail::member(j, "nonterminal", path), path + ".nonterminal");
  GraphDocument rhs = graph_from_json(detail::member(j, "rhs", path), path + ".rhs");

  const json& pairs = detail::member(j, "embedding", path);
  detail::expect_array(pairs, path + ".embedding");
  std::set<LabelPair> relation;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string pair_path = path + ".embedding[" + std::to_string(i) + "]";
    detail::expect_array(pairs[i], pair_path);
    if (pairs[i].size() != 2) throw ParseError(pair_path + ": expected a label pair");
    LabelPair p{Label{detail::expect_string(pairs[i][0], pair_path + "[0]")},
                Label{detail::expect_string(pairs[i][1], pair_path + "[1]")}};
    require_label_symbol(p.first.name);
    require_label_symbol(p.second.name);
    if (!relation.insert(p).second) {
      throw ValidationError(pair_path + ": duplicate embedding pair (" +
                            p.first.name + "," + p.second.name + ")");
    }
  }

  std::set<Label> alphabet = rhs.alphabet;
  if (alphabet.empty()) {
    alphabet = rhs.graph.label_set();
    for (const LabelPair& p : relation) {
      alphabet.insert(p.first);
      alphabet.insert(p.second);
    }
  }
  alphabet.insert(Label{nonterminal});
  return make_rule(Label{nonterminal}, std::move(rhs.graph),
                   make_embedding(std::move(relation), std::move(alphabet)));
}

inline json embedding_pairs_to_json(const std::set<LabelPair>& pairs) {
  json out = json::array();
  for (const LabelPair& p : pairs) {
    out.push_back(json::array({p.first.name, p.second.name}));
  }
  return out;
}

inline json rule_to_json(const NlcRule& rule) {
  json j = json::object();
  j["nonterminal"] = rule.nonterminal.name;
  j["rhs"] = graph_to_json(GraphDocument{rule.rhs, rule.embedding.alphabet});
  j["embedding"] = embedding_pairs_to_json(rule.embedding.pairs);
  return j;
}

inline NlcRule parse_rule(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return rule_from_json(j, "$");
}

inline std::string serialize_rule(const NlcRule& rule) {
  return dump_canonical(rule_to_json(rule));
}

/// Families are parsed against their host graph: every occurrence is
/// validated on load, and omitted mappings are inferred from the pattern.
inline Family family_from_json(const json& j, const LabelledGraph& host,
                               const std::string& path) {
  detail::expect_object(j, path);
  detail::reject_unknown_keys(j, path, {"pattern", "occurrences"});
  Family family;
  family.pattern =
      graph_from_json(detail::member(j, "pattern", path), path + ".pattern").graph;

  const json& occs = detail::member(j, "occurrences", path);
  detail::expect_array(occs, path + ".occurrences");
  for (std::size_t i = 0; i < occs.size(); ++i) {
    const std::string occ_path = path + ".occurrences[" + std::to_string(i) + "]";
    detail::expect_object(occs[i], occ_path);
    detail::reject_unknown_keys(occs[i], occ_path, {"nodes", "mapping"});

    const json& nodes = detail::member(occs[i], "nodes", occ_path);
    detail::expect_array(nodes, occ_path + ".nodes");
    std::set<NodeId> node_set;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::string item_path = occ_path + ".nodes[" + std::to_string(k) + "]";
      NodeId id = detail::expect_string(nodes[k], item_path);
      if (!host.has_node(id)) {
        throw ValidationError(item_path + ": unknown host node " + id);
      }
      if (!node_set.insert(id).second) {
        throw ValidationError(item_path + ": duplicate node " + id);
      }
    }

    std::optional<std::map<NodeId, NodeId>> mapping;
    if (const json* m = detail::optional_member(occs[i], "mapping")) {
      detail::expect_array(*m, occ_path + ".mapping");
      mapping.emplace();
      for (std::size_t k = 0; k < m->size(); ++k) {
        const std::string item_path = occ_path + ".mapping[" + std::to_string(k) + "]";
        detail::expect_array((*m)[k], item_path);
        if ((*m)[k].size() != 2) {
          throw ParseError(item_path + ": expected a [pattern-id, host-id] pair");
        }
        NodeId p = detail::expect_string((*m)[k][0], item_path + "[0]");
        NodeId h = detail::expect_string((*m)[k][1], item_path + "[1]");
        if (!mapping->emplace(p, h).second) {
          throw ValidationError(item_path + ": duplicate pattern node " + p);
        }
      }
    }
    try {
      family.members.push_back(make_occurrence(host, family.pattern, node_set, mapping));
    } catch (const ValidationError& e) {
      throw ValidationError(occ_path + ": " + e.what());
    }
  }
  return family;
}

inline Family parse_family(const std::string& text, const LabelledGraph& host) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return family_from_json(j, host, "$");
}

inline json family_to_json(const Family& family) {
  json j = json::object();
  j["pattern"] = graph_to_json(GraphDocument{family.pattern, {}});
  json occs = json::array();
  for (const Occurrence& occ : family.members) {
    json nodes = json::array();
    for (const NodeId& id : occ.host_nodes) nodes.push_back(id);
    json mapping = json::array();
    for (const auto& [p, h] : occ.embedding) mapping.push_back(json::array({p, h}));
    occs.push_back(json{{"nodes", std::move(nodes)}, {"mapping", std::move(mapping)}});
  }
  j["occurrences"] = std::move(occs);
  return j;
}

inline std::string serialize_family(const Family& family) {
  return dump_canonical(family_to_json(family));
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

/// DOT export with labels rendered as node text.
inline std::string to_dot(const LabelledGraph& g) {
  std::string out = "graph {\n";
  for (const auto& [id, label] : g.nodes()) {
    out += "  " + detail::dot_quote(id) + " [label=" +
           detail::dot_quote(label.name) + "];\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out += "  " + detail::dot_quote(a) + " -- " + detail::dot_quote(b) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace nlc::io

#endif  // NLC_IO_HPP_
