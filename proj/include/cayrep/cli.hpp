#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "autgrp.hpp"
#include "cayley.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "group_text.hpp"
#include "perm.hpp"

// Command-line front end. run_cli takes the argument vector (without the
// program name) and writes reports to out and diagnostics to err.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or invalid input,
// 3 resource limit hit.

namespace cayrep {

inline const char* kUsageText =
    "usage: cayrep <verb> [flags]\n"
    "\n"
    "verbs:\n"
    "  build           build a Cayley graph (--group + --set, or --graph to re-emit)\n"
    "  thm2            regular dihedral action on an abelian group's Cayley graph\n"
    "                  (--group --set --factor <i>)\n"
    "  corollary       one dihedral action per distinct 2-power factor order\n"
    "                  (--group --set)\n"
    "  thm3            regular abelian action on a dih(...) group's Cayley graph\n"
    "                  (--group --set --factor <i|none> [--all-witnesses])\n"
    "  autgrp          full automorphism group (--graph <file> | --group --set)\n"
    "  regular         all regular subgroups of the automorphism group\n"
    "                  (--graph <file> | --group --set)\n"
    "  verify          cross-check the constructions against the search oracle\n"
    "                  (--group --set [--factor <i|none>] | --graph <file> --group <spec>)\n"
    "  counterexample  the 27-vertex Cayley graph whose only regular subgroup\n"
    "                  is the translation group [--out <file>]\n"
    "  help            print this text\n"
    "\n"
    "flags:\n"
    "  --group <spec>    group spec, e.g. C8, C4xC2, dih(C4xC2)\n"
    "  --set \"<els>\"     semicolon-separated connection set, e.g. \"(1,0);(3,0);(0,1)\"\n"
    "  --factor <i|none> index of the distinguished cyclic factor\n"
    "  --graph <file>    read a graph file instead of building one\n"
    "  --all-witnesses   list every witness instead of only the first\n"
    "  --out <file>      write the graph file here\n"
    "\n"
    "exit codes: 0 ok, 1 verification failure, 2 usage, 3 resource limit\n";

struct CliOptions {
  std::string verb;
  std::optional<std::string> group;
  std::optional<std::string> set;
  std::optional<std::string> factor;
  std::optional<std::string> graph;
  std::optional<std::string> out;
  bool all_witnesses = false;
};

namespace detail {

inline CliOptions parse_cli_args(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("no verb given", 1, 1);
  CliOptions o;
  o.verb = args[0];
  auto take_value = [&](size_t& i, std::optional<std::string>& slot) {
    if (slot) throw UsageError("duplicate flag " + args[i], 1, 1);
    if (i + 1 >= args.size()) throw UsageError("flag " + args[i] + " needs a value", 1, 1);
    slot = args[++i];
  };
  for (size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--group") {
      take_value(i, o.group);
    } else if (a == "--set") {
      take_value(i, o.set);
    } else if (a == "--factor") {
      take_value(i, o.factor);
    } else if (a == "--graph") {
      take_value(i, o.graph);
    } else if (a == "--out") {
      take_value(i, o.out);
    } else if (a == "--all-witnesses") {
      if (o.all_witnesses) throw UsageError("duplicate flag --all-witnesses", 1, 1);
      o.all_witnesses = true;
    } else {
      throw UsageError("unknown argument '" + a + "'", 1, 1);
    }
  }
  return o;
}

inline void reject_flags(const CliOptions& o, bool factor_ok, bool graph_ok, bool out_ok,
                         bool witnesses_ok) {
  if (o.factor && !factor_ok)
    throw UsageError("--factor is not valid for verb '" + o.verb + "'", 1, 1);
  if (o.graph && !graph_ok)
    throw UsageError("--graph is not valid for verb '" + o.verb + "'", 1, 1);
  if (o.out && !out_ok) throw UsageError("--out is not valid for verb '" + o.verb + "'", 1, 1);
  if (o.all_witnesses && !witnesses_ok)
    throw UsageError("--all-witnesses is not valid for verb '" + o.verb + "'", 1, 1);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'", 1, 1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing file '" + path + "'");
}

inline std::pair<GroupSpec, ConnectionSet> parse_connection(const CliOptions& o) {
  if (!o.group || !o.set)
    throw UsageError("verb '" + o.verb + "' needs --group and --set", 1, 1);
  GroupSpec spec = parse_group_spec(*o.group);
  std::vector<Element> els = parse_element_list(spec, *o.set);
  return {spec, validate_connection_set(spec, els)};
}

inline Graph input_graph(const CliOptions& o) {
  if (o.graph) {
    if (o.group || o.set)
      throw UsageError("give --graph alone, or --group with --set", 1, 1);
    return parse_graph(read_text_file(*o.graph));
  }
  return build_cayley_graph(parse_connection(o).second);
}

// --factor value: an index, or "none" where a trivial distinguished factor
// is allowed.
inline std::optional<int> parse_factor_token(const std::string& token, bool none_ok) {
  if (token == "none") {
    if (!none_ok) throw UsageError("--factor none is not valid for this verb", 1, 1);
    return std::nullopt;
  }
  for (char ch : token)
    if (!isdigit(static_cast<unsigned char>(ch)))
      throw UsageError("--factor expects an index or 'none', got '" + token + "'", 1, 1);
  if (token.empty() || token.size() > 6)
    throw UsageError("--factor expects an index or 'none', got '" + token + "'", 1, 1);
  return std::stoi(token);
}

inline void print_graph_line(std::ostream& out, const Graph& g) {
  out << "GRAPH " << g.n << ' ' << g.edge_count() << '\n';
}

inline void print_action(std::ostream& out, const RegularAction& act) {
  out << "CLASSIFIED " << act.group_type.str() << '\n';
  out << "ORDER " << act.group.size() << '\n';
  out << "REGULAR true\n";
  for (const auto& g : act.generators) out << "GEN " << g.label << ' ' << to_string(g.perm) << '\n';
}

inline void print_factor_line(std::ostream& out, const FactorChoice& ch) {
  out << "FACTOR " << ch.index << " ORDER " << (1 << ch.k) << '\n';
}

inline std::string dihedral_notation(const GroupSpec& spec, const FactorChoice& ch) {
  return GroupType::dihedral_over(invariant_factors(index_two_subgroup_orders(spec, ch))).str();
}

// ---------------------------------------------------------------------------
// Verb handlers.
// ---------------------------------------------------------------------------

inline int handle_build(const CliOptions& o, std::ostream& out) {
  reject_flags(o, false, true, true, false);
  Graph g;
  if (o.graph) {
    if (o.group || o.set)
      throw UsageError("build takes --group with --set, or --graph, not both", 1, 1);
    g = parse_graph(read_text_file(*o.graph));
  } else {
    g = build_cayley_graph(parse_connection(o).second);
  }
  std::string text = write_graph(g);
  if (o.out) {
    write_text_file(*o.out, text);
    out << "WROTE " << *o.out << '\n';
    print_graph_line(out, g);
  } else {
    out << text;
  }
  return 0;
}

inline int handle_thm2(const CliOptions& o, std::ostream& out) {
  reject_flags(o, true, false, false, false);
  auto [spec, cs] = parse_connection(o);
  if (!o.factor) throw UsageError("thm2 needs --factor <index>", 1, 1);
  std::optional<int> idx = parse_factor_token(*o.factor, false);
  FactorChoice ch = make_factor_choice(spec, *idx);
  RegularAction act = dihedral_action_on_abelian(cs, ch);
  Graph g = build_cayley_graph(cs);
  print_graph_line(out, g);
  print_factor_line(out, ch);
  out << "TYPE " << dihedral_notation(spec, ch) << '\n';
  print_action(out, act);
  return 0;
}

inline int handle_corollary(const CliOptions& o, std::ostream& out) {
  reject_flags(o, false, false, false, false);
  auto [spec, cs] = parse_connection(o);
  auto actions = dihedral_actions_per_two_power(cs);
  Graph g = build_cayley_graph(cs);
  print_graph_line(out, g);
  out << "ACTIONS " << actions.size() << '\n';
  for (const auto& [ch, act] : actions) {
    print_factor_line(out, ch);
    out << "TYPE " << dihedral_notation(spec, ch) << '\n';
    print_action(out, act);
  }
  return 0;
}

inline int handle_thm3(const CliOptions& o, std::ostream& out) {
  reject_flags(o, true, false, false, true);
  auto [spec, cs] = parse_connection(o);
  if (!spec.dihedral())
    throw MismatchedSpec("thm3 needs a dih(...) group, got " + to_string(spec));
  if (!o.factor) throw UsageError("thm3 needs --factor <index|none>", 1, 1);
  std::optional<int> idx = parse_factor_token(*o.factor, true);
  Thm3Instance inst{spec, std::nullopt, std::nullopt};
  if (idx) inst.factor = make_factor_choice(spec, *idx);
  Graph g = build_cayley_graph(cs);
  print_graph_line(out, g);
  if (inst.factor)
    print_factor_line(out, *inst.factor);
  else
    out << "FACTOR none\n";

  if (o.all_witnesses) {
    std::vector<Element> ws = reflection_witnesses(inst, cs);
    if (ws.empty()) {
      out << "WITNESS none\n";
      return 0;
    }
    for (const auto& w : ws) out << "WITNESS " << to_string(spec, w) << '\n';
    inst.witness = ws.front();
  } else {
    std::optional<Element> w = find_reflection_witness(inst, cs);
    if (!w) {
      out << "WITNESS none\n";
      return 0;
    }
    out << "WITNESS " << to_string(spec, *w) << '\n';
    inst.witness = w;
  }
  RegularAction act = abelian_action_on_dihedral(inst, cs);
  out << "TYPE " << act.group_type.str() << '\n';
  int k = inst.factor ? inst.factor->k : 0;
  out << "BETA ORDER " << (1L << (k + 1)) << '\n';
  print_action(out, act);
  return 0;
}

inline int handle_autgrp(const CliOptions& o, std::ostream& out) {
  reject_flags(o, false, true, false, false);
  Graph g = input_graph(o);
  AutResult res = automorphism_group(g);
  print_graph_line(out, g);
  out << "GRAPH HASH " << res.hash << '\n';
  out << "AUT ORDER " << res.order << '\n';
  for (const auto& p : greedy_generators(res.elements)) out << "GEN " << to_string(p) << '\n';
  return 0;
}

inline int handle_regular(const CliOptions& o, std::ostream& out) {
  reject_flags(o, false, true, false, false);
  Graph g = input_graph(o);
  AutResult aut = automorphism_group(g);
  RegularSubgroupReport rep = enumerate_regular_subgroups(g, aut);
  print_graph_line(out, g);
  out << render_regular_report(aut, rep);
  return 0;
}

inline int handle_verify_constructions(const CliOptions& o, std::ostream& out) {
  auto [spec, cs] = parse_connection(o);
  Graph g = build_cayley_graph(cs);
  print_graph_line(out, g);
  bool all_ok = true;
  auto check = [&](const std::string& name, auto&& fn) {
    try {
      if (fn()) {
        out << "CHECK " << name << " OK\n";
      } else {
        out << "CHECK " << name << " FAIL\n";
        all_ok = false;
      }
    } catch (const ResourceLimit&) {
      throw;
    } catch (const Error& e) {
      out << "CHECK " << name << " FAIL (" << e.what() << ")\n";
      all_ok = false;
    }
  };

  PermSet trans = right_translations(spec);
  check("translations-are-automorphisms", [&] {
    for (const auto& p : trans.elements)
      if (!is_automorphism(g, p)) return false;
    return true;
  });
  check("translations-regular", [&] { return is_regular(trans); });

  std::vector<RegularAction> acts;
  if (!spec.dihedral()) {
    std::vector<FactorChoice> choices;
    if (o.factor) {
      std::optional<int> idx = parse_factor_token(*o.factor, false);
      choices.push_back(make_factor_choice(spec, *idx));
    } else {
      choices = split_choices(spec);
    }
    if (choices.empty()) out << "CHECK construction SKIPPED (no 2-power factor)\n";
    for (const auto& ch : choices)
      check("construction-factor-" + std::to_string(ch.index), [&] {
        acts.push_back(dihedral_action_on_abelian(cs, ch));
        return verify_action(g, acts.back());
      });
  } else {
    Thm3Instance inst{spec, std::nullopt, std::nullopt};
    if (o.factor) {
      std::optional<int> idx = parse_factor_token(*o.factor, true);
      if (idx) inst.factor = make_factor_choice(spec, *idx);
    }
    std::optional<Element> w = find_reflection_witness(inst, cs);
    if (!w) {
      out << "CHECK construction SKIPPED (no witness)\n";
    } else {
      out << "WITNESS " << to_string(spec, *w) << '\n';
      inst.witness = w;
      check("construction-witness", [&] {
        acts.push_back(abelian_action_on_dihedral(inst, cs));
        return verify_action(g, acts.back());
      });
    }
  }

  if (g.n <= kMaxAutVertices) {
    check("oracle-containment", [&] {
      AutResult aut = automorphism_group(g);
      RegularSubgroupReport rep = enumerate_regular_subgroups(g, aut);
      std::set<std::vector<std::vector<int>>> keys;
      for (const auto& sub : rep.subgroups) {
        std::vector<std::vector<int>> key;
        for (const auto& p : sub.elements.elements) key.push_back(p.images);
        keys.insert(key);
      }
      auto key_of = [](const PermSet& s) {
        std::vector<std::vector<int>> key;
        for (const auto& p : s.elements) key.push_back(p.images);
        std::sort(key.begin(), key.end());
        return key;
      };
      if (!keys.count(key_of(trans))) return false;
      for (const auto& act : acts)
        if (!keys.count(key_of(act.group))) return false;
      return true;
    });
  } else {
    out << "CHECK oracle SKIPPED (graph too large)\n";
  }

  out << (all_ok ? "VERIFY OK\n" : "VERIFY FAIL\n");
  return all_ok ? 0 : 1;
}

inline int handle_verify_graph(const CliOptions& o, std::ostream& out) {
  Graph g = parse_graph(read_text_file(*o.graph));
  GroupSpec spec = parse_group_spec(*o.group);
  print_graph_line(out, g);
  if (spec.order() != g.n) {
    out << "CAYLEY ON " << to_string(spec) << " false\n";
    out << "VERIFY FAIL\n";
    return 1;
  }
  AutResult aut = automorphism_group(g);
  RegularSubgroupReport rep = enumerate_regular_subgroups(g, aut);
  out << "AUT ORDER " << aut.order << '\n';
  out << "REGULAR SUBGROUPS " << rep.subgroups.size() << '\n';
  GroupType want = spec_type(spec);
  bool found = false;
  for (const auto& sub : rep.subgroups) {
    if (sub.type != want) continue;
    if (!is_isomorphic(regular_representation(spec), multiplication_table(sub.elements)))
      throw InternalVerificationFailed(
          "type match disagrees with the explicit isomorphism search");
    found = true;
    break;
  }
  out << "CAYLEY ON " << to_string(spec) << ' ' << (found ? "true" : "false") << '\n';
  out << "VERIFY " << (found ? "OK" : "FAIL") << '\n';
  return found ? 0 : 1;
}

inline int handle_verify(const CliOptions& o, std::ostream& out) {
  reject_flags(o, true, true, false, false);
  if (o.graph && o.group && !o.set) return handle_verify_graph(o, out);
  if (o.group && o.set && !o.graph) return handle_verify_constructions(o, out);
  throw UsageError("verify takes --group with --set, or --graph with --group", 1, 1);
}

inline int handle_counterexample(const CliOptions& o, std::ostream& out) {
  reject_flags(o, false, false, true, false);
  if (o.group || o.set)
    throw UsageError("counterexample takes no --group or --set; it is fixed", 1, 1);
  GroupSpec spec = abelian_spec({9, 3});
  std::vector<Element> raw{
      {0, {1, 0}}, {0, {0, 1}}, {0, {8, 0}}, {0, {0, 2}}};
  ConnectionSet cs = validate_connection_set(spec, raw);
  Graph g = build_cayley_graph(cs);
  out << "GROUP " << to_string(spec) << '\n';
  out << "SET " << to_string(spec, cs.elements) << '\n';
  print_graph_line(out, g);
  if (o.out) {
    write_text_file(*o.out, write_graph(g));
    out << "WROTE " << *o.out << '\n';
  }
  AutResult aut = automorphism_group(g);
  RegularSubgroupReport rep = enumerate_regular_subgroups(g, aut);
  out << "AUT ORDER " << aut.order << '\n';
  out << "REGULAR SUBGROUPS " << rep.subgroups.size() << '\n';
  for (const auto& sub : rep.subgroups) out << "TYPE " << sub.type.str() << '\n';

  bool unique = rep.subgroups.size() == 1;
  bool right_type = unique && rep.subgroups[0].type == GroupType::abelian({3, 9});
  bool is_translations = false;
  if (right_type) {
    std::vector<std::vector<int>> trans_key;
    for (const auto& p : right_translations(spec).elements) trans_key.push_back(p.images);
    std::sort(trans_key.begin(), trans_key.end());
    std::vector<std::vector<int>> sub_key;
    for (const auto& p : rep.subgroups[0].elements.elements) sub_key.push_back(p.images);
    is_translations = trans_key == sub_key;
  }
  out << "ONLY TRANSLATIONS " << (is_translations ? "true" : "false") << '\n';
  bool ok = unique && right_type && is_translations;
  out << (ok ? "COUNTEREXAMPLE CONFIRMED\n" : "COUNTEREXAMPLE FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    CliOptions o = detail::parse_cli_args(args);
    if (o.verb == "help") {
      out << kUsageText;
      return 0;
    }
    if (o.verb == "build") return detail::handle_build(o, out);
    if (o.verb == "thm2") return detail::handle_thm2(o, out);
    if (o.verb == "corollary") return detail::handle_corollary(o, out);
    if (o.verb == "thm3") return detail::handle_thm3(o, out);
    if (o.verb == "autgrp") return detail::handle_autgrp(o, out);
    if (o.verb == "regular") return detail::handle_regular(o, out);
    if (o.verb == "verify") return detail::handle_verify(o, out);
    if (o.verb == "counterexample") return detail::handle_counterexample(o, out);
    throw UsageError("unknown verb '" + o.verb + "'", 1, 1);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << kUsageText;
    return 2;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cayrep
