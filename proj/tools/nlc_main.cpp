//
// nlc-infer - Copyright 2026 The nlc-infer Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Command-line surface. Exit codes: 0 = affirmative result, 1 = negative
// verdict (no witness / verification failed), 2 = error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlc/generator.hpp"
#include "nlc/io.hpp"
#include "nlc/ordering.hpp"
#include "nlc/pattern.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nlc::InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

// 1-based index list "1,2,3" -> 0-based order.
std::vector<std::size_t> parse_order_indices(const std::string& text,
                                             std::size_t family_size) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_csv(text)) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw nlc::InputError("invalid occurrence index: " + item);
    }
    if (pos != item.size() || value < 1 || value > family_size) {
      throw nlc::InputError("invalid occurrence index: " + item);
    }
    out.push_back(static_cast<std::size_t>(value - 1));
  }
  return out;
}

std::size_t search_cap_from_env() {
  const char* raw = std::getenv("NLC_MAX_N");
  if (raw == nullptr) return nlc::kDefaultSearchCap;
  try {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(raw, &pos);
    if (pos != std::string(raw).size() || value < 1) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    throw nlc::InputError(std::string("invalid NLC_MAX_N value: ") + raw);
  }
}

void print_rule_warnings(const nlc::NlcRule& rule) {
  for (const std::string& w : nlc::rule_warnings(rule)) {
    std::cerr << "warning: " << w << "\n";
  }
}

int run_apply(const std::string& graph_file, const std::string& rule_file,
              const std::string& node, bool dot) {
  const nlc::io::GraphDocument doc = nlc::io::parse_graph(read_file(graph_file));
  const nlc::NlcRule rule = nlc::io::parse_rule(read_file(rule_file));
  print_rule_warnings(rule);
  const nlc::LabelledGraph result = nlc::apply_rule(doc.graph, rule, node);
  if (dot) {
    std::cout << nlc::io::to_dot(result);
  } else {
    std::cout << nlc::io::serialize_graph({result, doc.alphabet});
  }
  return kExitOk;
}

int run_derive(const std::string& graph_file, const std::string& rule_file,
               const std::string& order, bool dot) {
  const nlc::io::GraphDocument doc = nlc::io::parse_graph(read_file(graph_file));
  const nlc::NlcRule rule = nlc::io::parse_rule(read_file(rule_file));
  print_rule_warnings(rule);
  const nlc::DerivationTrace trace =
      nlc::derive(doc.graph, rule, split_csv(order));
  if (dot) {
    std::cout << nlc::io::to_dot(trace.result);
  } else {
    std::cout << nlc::io::serialize_graph({trace.result, doc.alphabet});
  }
  return kExitOk;
}

int run_infer(const std::string& graph_file, const std::string& family_file,
              const std::string& order) {
  const nlc::io::GraphDocument doc = nlc::io::parse_graph(read_file(graph_file));
  const nlc::Family family = nlc::io::parse_family(read_file(family_file), doc.graph);

  std::optional<nlc::OrderingWitness> witness;
  if (order.empty()) {
    witness = nlc::search_ordering(doc.graph, family, nlc::kDefaultNonterminal,
                                   search_cap_from_env());
  } else {
    std::vector<std::size_t> indices =
        parse_order_indices(order, family.members.size());
    if (auto relation = nlc::ordering_existence(doc.graph, family, indices)) {
      witness = nlc::OrderingWitness{std::move(indices), std::move(*relation)};
    }
  }
  if (!witness.has_value()) return kExitNegative;

  nlc::io::json out = nlc::io::json::object();
  nlc::io::json order_json = nlc::io::json::array();
  for (std::size_t idx : witness->order) order_json.push_back(idx + 1);
  out["order"] = std::move(order_json);
  out["embedding"] = nlc::io::embedding_pairs_to_json(witness->relation.pairs);
  std::cout << nlc::io::dump_canonical(out);
  return kExitOk;
}

int run_verify(const std::string& graph_file, const std::string& family_file,
               const std::string& rule_file, const std::string& order) {
  const nlc::io::GraphDocument doc = nlc::io::parse_graph(read_file(graph_file));
  nlc::Family family = nlc::io::parse_family(read_file(family_file), doc.graph);
  const nlc::NlcRule rule = nlc::io::parse_rule(read_file(rule_file));
  print_rule_warnings(rule);

  // The rule's right-hand side may name its nodes differently from the
  // family pattern; compose through an isomorphism so occurrence embeddings
  // are keyed by right-hand-side nodes.
  const auto iso = nlc::label_isomorphism(rule.rhs, family.pattern);
  if (!iso.has_value()) {
    throw nlc::InputError("rule right-hand side does not match the family pattern");
  }
  nlc::Family adjusted;
  adjusted.pattern = rule.rhs;
  for (const nlc::Occurrence& occ : family.members) {
    nlc::Occurrence composed;
    composed.host_nodes = occ.host_nodes;
    for (const auto& [r, p] : *iso) composed.embedding.emplace(r, occ.embedding.at(p));
    adjusted.members.push_back(std::move(composed));
  }

  const std::vector<std::size_t> indices =
      parse_order_indices(order, adjusted.members.size());
  const nlc::VerifyResult result = nlc::verify_forward(
      doc.graph, adjusted, indices, rule.embedding, rule.nonterminal);
  if (!result.ok) {
    std::cerr << "verification failed: " << result.diagnostic << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

int run_find(const std::string& graph_file, const std::string& pattern_file,
             std::optional<std::size_t> k) {
  const nlc::io::GraphDocument doc = nlc::io::parse_graph(read_file(graph_file));
  const nlc::io::GraphDocument pattern = nlc::io::parse_graph(read_file(pattern_file));
  const nlc::OccurrenceList list = nlc::find_occurrences(doc.graph, pattern.graph);

  nlc::io::json out = nlc::io::json::object();
  out["pattern"] = nlc::io::graph_to_json({list.pattern, {}});
  nlc::io::json occs = nlc::io::json::array();
  for (const nlc::Occurrence& occ : list.occurrences) {
    nlc::io::json nodes = nlc::io::json::array();
    for (const nlc::NodeId& id : occ.host_nodes) nodes.push_back(id);
    nlc::io::json mapping = nlc::io::json::array();
    for (const auto& [p, h] : occ.embedding) {
      mapping.push_back(nlc::io::json::array({p, h}));
    }
    occs.push_back(nlc::io::json{{"nodes", std::move(nodes)},
                                 {"mapping", std::move(mapping)}});
  }
  out["occurrences"] = std::move(occs);
  out["truncated"] = list.truncated;
  if (k.has_value()) {
    const nlc::DisjointFamilies families = nlc::disjoint_families(list, *k);
    nlc::io::json fams = nlc::io::json::array();
    for (const auto& family : families.families) {
      nlc::io::json indices = nlc::io::json::array();
      for (std::size_t idx : family) indices.push_back(idx + 1);
      fams.push_back(std::move(indices));
    }
    out["families"] = std::move(fams);
    out["families_truncated"] = families.truncated;
  }
  std::cout << nlc::io::dump_canonical(out);
  return kExitOk;
}

int run_gen(std::uint64_t seed, int labels, int pattern_size, int copies) {
  nlc::GenParams params;
  params.seed = seed;
  params.labels = labels;
  params.pattern_size = pattern_size;
  params.copies = copies;
  const nlc::GenBundle bundle = nlc::generate_instance(params);

  nlc::io::json out = nlc::io::json::object();
  out["graph"] = nlc::io::graph_to_json(
      {bundle.graph, bundle.rule.embedding.alphabet});
  out["rule"] = nlc::io::rule_to_json(bundle.rule);
  out["family"] = nlc::io::family_to_json(bundle.family);
  nlc::io::json order_json = nlc::io::json::array();
  for (std::size_t idx : bundle.order) order_json.push_back(idx + 1);
  out["order"] = std::move(order_json);
  std::cout << nlc::io::dump_canonical(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NLC graph grammar rule application, inference and verification"};
  app.require_subcommand(1);

  std::string graph_file, rule_file, family_file, pattern_file, node, order;
  bool dot = false;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  int labels = 2, pattern_size = 2, copies = 2;

  CLI::App* apply = app.add_subcommand("apply", "Apply the rule at one node");
  apply->add_option("--graph", graph_file, "host graph JSON")->required();
  apply->add_option("--rule", rule_file, "rule JSON")->required();
  apply->add_option("--node", node, "replaced node identifier")->required();
  apply->add_flag("--dot", dot, "emit DOT instead of JSON");

  CLI::App* derive = app.add_subcommand("derive", "Apply the rule along an order");
  derive->add_option("--graph", graph_file, "host graph JSON")->required();
  derive->add_option("--rule", rule_file, "rule JSON")->required();
  derive->add_option("--order", order, "comma-separated node identifiers");
  derive->add_flag("--dot", dot, "emit DOT instead of JSON");

  CLI::App* infer = app.add_subcommand(
      "infer", "Find an order and embedding relation generating the family");
  infer->add_option("--graph", graph_file, "host graph JSON")->required();
  infer->add_option("--family", family_file, "family JSON")->required();
  infer->add_option("--order", order, "comma-separated 1-based occurrence indices");

  CLI::App* verify = app.add_subcommand(
      "verify", "Re-derive the host from the contracted family");
  verify->add_option("--graph", graph_file, "host graph JSON")->required();
  verify->add_option("--family", family_file, "family JSON")->required();
  verify->add_option("--rule", rule_file, "rule JSON")->required();
  verify->add_option("--order", order, "comma-separated 1-based occurrence indices")
      ->required();

  CLI::App* find = app.add_subcommand("find", "Enumerate pattern occurrences");
  find->add_option("--graph", graph_file, "host graph JSON")->required();
  find->add_option("--pattern", pattern_file, "pattern graph JSON")->required();
  find->add_option("--k", k, "also list disjoint families of this size");

  CLI::App* gen = app.add_subcommand("gen", "Generate a random derivable instance");
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--labels", labels, "terminal alphabet size (default 2)");
  gen->add_option("--pattern-size", pattern_size, "right-hand-side size (default 2)");
  gen->add_option("--copies", copies, "nonterminal count (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (apply->parsed()) return run_apply(graph_file, rule_file, node, dot);
    if (derive->parsed()) return run_derive(graph_file, rule_file, order, dot);
    if (infer->parsed()) return run_infer(graph_file, family_file, order);
    if (verify->parsed()) return run_verify(graph_file, family_file, rule_file, order);
    if (find->parsed()) return run_find(graph_file, pattern_file, k);
    if (gen->parsed()) return run_gen(seed, labels, pattern_size, copies);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
