// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
//
// The randomized sweeps use a fixed seed, so every run works through the same
// instances. Sampled connection sets are kept to graphs whose automorphism
// group stays enumerable: the set must generate the group and, past 8
// vertices, its complement must generate too, which rules out the complete
// multipartite and disconnected shapes whose automorphism groups explode.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cayrep/autgrp.hpp"
#include "cayrep/cayley.hpp"
#include "cayrep/cli.hpp"
#include "cayrep/constructions.hpp"
#include "cayrep/group.hpp"
#include "cayrep/group_text.hpp"
#include "cayrep/perm.hpp"

using namespace cayrep;

namespace {

int failures = 0;

void report(int idx, const std::string& slug, const std::string& why) {
  std::cout << "CRITERION " << idx << ' ' << slug << (why.empty() ? " PASS" : " FAIL");
  if (!why.empty()) {
    std::cout << " (" << why << ')';
    ++failures;
  }
  std::cout << '\n';
}

using Key = std::vector<std::vector<int>>;

Key key_of(const PermSet& s) {
  Key key;
  for (const auto& p : s.elements) key.push_back(p.images);
  std::sort(key.begin(), key.end());
  return key;
}

// Graphs built by the sweeps, with the element sets of every action
// constructed on them, deduplicated by group and connection set.
struct Collected {
  Graph graph;
  std::set<Key> actions;
};
using Collection = std::map<std::string, Collected>;

void collect(Collection& col, const GroupSpec& spec, const ConnectionSet& s, const Graph& g,
             const RegularAction* act) {
  std::string key = to_string(spec) + "|" + to_string(spec, s.elements);
  auto [it, fresh] = col.emplace(key, Collected{g, {}});
  if (act) it->second.actions.insert(key_of(act->group));
  (void)fresh;
}

std::vector<Element> random_inverse_closed(const GroupSpec& spec, std::mt19937& rng) {
  std::vector<Element> out;
  for (const auto& e : enumerate_elements(spec)) {
    if (is_identity(e)) continue;
    Element inv = invert(spec, e);
    if (inv < e) continue;
    if (rng() & 1) {
      out.push_back(e);
      if (!(inv == e)) out.push_back(inv);
    }
  }
  return out;
}

bool generates(const GroupSpec& spec, const std::vector<Element>& els) {
  long n = spec.order();
  std::vector<Element> all = enumerate_elements(spec);
  std::vector<char> seen(n, 0);
  std::vector<long> stack{0};
  seen[0] = 1;
  long cnt = 1;
  while (!stack.empty()) {
    long u = stack.back();
    stack.pop_back();
    for (const auto& s : els) {
      long v = element_index(spec, multiply(spec, s, all[u]));
      if (!seen[v]) {
        seen[v] = 1;
        ++cnt;
        stack.push_back(v);
      }
    }
  }
  return cnt == n;
}

std::vector<Element> sample_set(const GroupSpec& spec, std::mt19937& rng) {
  for (int attempt = 0; attempt < 5000; ++attempt) {
    std::vector<Element> s = random_inverse_closed(spec, rng);
    if (!generates(spec, s)) continue;
    if (spec.order() > 8) {
      std::vector<Element> comp;
      for (const auto& e : enumerate_elements(spec))
        if (!is_identity(e) && std::find(s.begin(), s.end(), e) == s.end()) comp.push_back(e);
      if (!generates(spec, comp)) continue;
    }
    return s;
  }
  throw Error("sampler found no generating set for " + to_string(spec));
}

void ordered_factorizations(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    cur.push_back(d);
    ordered_factorizations(n / d, cur, out);
    cur.pop_back();
  }
}

std::vector<GroupSpec> even_specs_up_to_16() {
  std::vector<GroupSpec> specs;
  for (int n = 2; n <= 16; n += 2) {
    std::vector<int> cur;
    std::vector<std::vector<int>> outs;
    ordered_factorizations(n, cur, outs);
    for (const auto& f : outs) specs.push_back(abelian_spec(f));
  }
  return specs;
}

std::string run_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = run_cli(args, out, err);
  return "exit " + std::to_string(rc) + "\n" + out.str() + err.str();
}

std::optional<std::string> capture(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return std::nullopt;
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  if (pclose(p) != 0) return std::nullopt;
  return out;
}

// --------------------------------------------------------------------------

std::string criterion_counterexample() {
  GroupSpec spec = abelian_spec({9, 3});
  std::vector<Element> raw{{0, {1, 0}}, {0, {0, 1}}, {0, {8, 0}}, {0, {0, 2}}};
  ConnectionSet cs = validate_connection_set(spec, raw);
  Graph g = build_cayley_graph(cs);
  if (g.n != 27) return "graph has " + std::to_string(g.n) + " vertices";
  for (const auto& row : g.adj)
    if (row.size() != 4) return "graph is not 4-regular";
  if (g.edge_count() != 54) return "graph has " + std::to_string(g.edge_count()) + " edges";
  AutResult aut = automorphism_group(g);
  if (aut.order != 108) return "automorphism group has order " + std::to_string(aut.order);
  RegularSubgroupReport rep = enumerate_regular_subgroups(g, aut);
  if (rep.subgroups.size() != 1)
    return std::to_string(rep.subgroups.size()) + " regular subgroups, expected 1";
  if (rep.subgroups[0].type != GroupType::abelian({3, 9}))
    return "subgroup has type " + rep.subgroups[0].type.str();
  if (key_of(rep.subgroups[0].elements) != key_of(right_translations(spec)))
    return "the single subgroup is not the translation group";
  return "";
}

std::string criterion_dihedral_sweep(std::vector<RegularAction>& actions, Collection& col) {
  std::mt19937 rng(0x5eed2024);
  std::vector<GroupSpec> specs = even_specs_up_to_16();
  if (specs.size() != 32)
    return "expected 32 even-order specs, enumerated " + std::to_string(specs.size());
  long built = 0;
  for (const GroupSpec& spec : specs) {
    for (int trial = 0; trial < 25; ++trial) {
      ConnectionSet s = validate_connection_set(spec, sample_set(spec, rng));
      Graph g = build_cayley_graph(s);
      collect(col, spec, s, g, nullptr);
      for (int i = 0; i < static_cast<int>(spec.orders.size()); ++i) {
        if (!is_power_of_two(spec.orders[i])) continue;
        FactorChoice ch = make_factor_choice(spec, i);
        RegularAction act;
        try {
          act = dihedral_action_on_abelian(s, ch);
        } catch (const Error& e) {
          return to_string(spec) + " set " + to_string(spec, s.elements) + " factor " +
                 std::to_string(i) + ": " + e.what();
        }
        if (!verify_action(g, act))
          return to_string(spec) + " set " + to_string(spec, s.elements) + " factor " +
                 std::to_string(i) + ": action fails verify_action";
        collect(col, spec, s, g, &act);
        actions.push_back(std::move(act));
        ++built;
      }
    }
  }
  if (built == 0) return "sweep built no actions";
  return "";
}

std::string criterion_dihedral_invariants(const std::vector<RegularAction>& actions) {
  if (actions.empty()) return "no actions to check";
  for (const RegularAction& act : actions) {
    const Permutation& beta = act.generators.back().perm;
    if (compose(beta, beta) != identity_perm(act.degree)) return "beta squared is not the identity";
    for (const auto& gen : act.generators) {
      if (gen.label == "beta") continue;
      if (compose(beta, compose(gen.perm, beta)) != invert(gen.perm))
        return "conjugation by beta fails to invert " + gen.label;
    }
    if (!is_transitive(act.group)) return "action is not transitive";
  }
  return "";
}

std::string criterion_corollary_types(Collection& col) {
  std::mt19937 rng(0xab5eed);
  GroupSpec small = abelian_spec({4, 2});
  ConnectionSet s = validate_connection_set(small, sample_set(small, rng));
  auto actions = dihedral_actions_per_two_power(s);
  if (actions.size() != 2) return "C4xC2 gave " + std::to_string(actions.size()) + " actions";
  std::set<std::string> got{actions[0].second.group_type.str(),
                            actions[1].second.group_type.str()};
  if (got != std::set<std::string>{"dih(C4)", "C2xC2xC2"})
    return "C4xC2 action types are " + *got.begin() + " and " + *std::next(got.begin());
  Graph g = build_cayley_graph(s);
  for (const auto& [ch, act] : actions) collect(col, small, s, g, &act);

  GroupSpec big = abelian_spec({8, 4, 2});
  ConnectionSet sb = validate_connection_set(big, random_inverse_closed(big, rng));
  auto three = dihedral_actions_per_two_power(sb);
  if (three.size() != 3) return "C8xC4xC2 gave " + std::to_string(three.size()) + " actions";
  std::set<std::string> want{"dih(C4xC4xC2)", "dih(C8xC2xC2)", "dih(C8xC4)"};
  std::set<std::string> have;
  for (const auto& [ch, act] : three) have.insert(act.group_type.str());
  if (have != want) {
    std::string list;
    for (const auto& t : have) list += t + " ";
    return "C8xC4xC2 action types are " + list;
  }
  return "";
}

std::string criterion_abelian_actions(Collection& col) {
  GroupSpec d3 = dihedral_over({3});
  ConnectionSet k33 = validate_connection_set(
      d3, {Element{1, {0}}, Element{1, {1}}, Element{1, {2}}});
  Thm3Instance flat{d3, std::nullopt, std::nullopt};
  flat.witness = find_reflection_witness(flat, k33);
  if (!flat.witness) return "no witness on the complete bipartite case";
  RegularAction a = abelian_action_on_dihedral(flat, k33);
  Graph ga = build_cayley_graph(k33);
  if (a.group_type != GroupType::abelian({6}))
    return "complete bipartite action has type " + a.group_type.str();
  if (!verify_action(ga, a)) return "complete bipartite action fails verify_action";
  if (perm_order(a.generators.back().perm) != 2)
    return "complete bipartite beta does not have order 2";
  collect(col, d3, k33, ga, &a);

  GroupSpec d4 = dihedral_over({4});
  ConnectionSet cyc = validate_connection_set(d4, {Element{1, {0}}, Element{1, {1}}});
  Thm3Instance split{d4, make_factor_choice(d4, 0), std::nullopt};
  split.witness = find_reflection_witness(split, cyc);
  if (!split.witness) return "no witness on the 8-cycle case";
  RegularAction b = abelian_action_on_dihedral(split, cyc);
  Graph gb = build_cayley_graph(cyc);
  if (b.group_type != GroupType::abelian({8}))
    return "8-cycle action has type " + b.group_type.str();
  if (!verify_action(gb, b)) return "8-cycle action fails verify_action";
  if (perm_order(b.generators.back().perm) != 8) return "8-cycle beta does not have order 8";
  collect(col, d4, cyc, gb, &b);
  return "";
}

std::string criterion_no_witness_scan() {
  // independent scan: S = {x(0), x(1)} over dih(C4) with the trivial factor,
  // so the condition is  (w+g) mod 4 in {0,1}  iff  (w-g) mod 4 in {0,1}
  std::set<int> sx{0, 1};
  for (int w = 0; w < 4; ++w) {
    bool holds = true;
    for (int g = 0; g < 4 && holds; ++g)
      holds = sx.count(((w + g) % 4 + 4) % 4) == sx.count(((w - g) % 4 + 4) % 4);
    if (holds) return "hand scan found witness " + std::to_string(w);
  }
  GroupSpec d4 = dihedral_over({4});
  ConnectionSet s = validate_connection_set(d4, {Element{1, {0}}, Element{1, {1}}});
  Thm3Instance inst{d4, std::nullopt, std::nullopt};
  if (!reflection_witnesses(inst, s).empty()) return "library scan disagrees with the hand scan";
  return "";
}

std::string criterion_cross_validation(const Collection& col) {
  if (col.empty()) return "nothing collected";
  long graphs = 0, checked = 0;
  for (const auto& [key, c] : col) {
    if (c.graph.n > 16) continue;
    ++graphs;
    if (c.actions.empty()) continue;
    AutResult aut;
    RegularSubgroupReport rep;
    try {
      aut = automorphism_group(c.graph);
      rep = enumerate_regular_subgroups(c.graph, aut);
    } catch (const Error& e) {
      return key + ": " + e.what();
    }
    std::set<Key> found;
    for (const auto& sub : rep.subgroups) found.insert(key_of(sub.elements));
    for (const auto& act : c.actions) {
      if (!found.count(act)) return key + ": a constructed action is missing from the oracle";
      ++checked;
    }
  }
  if (graphs == 0 || checked == 0) return "cross-validation covered nothing";
  return "";
}

std::string criterion_oracle_sanity() {
  GroupSpec c6 = abelian_spec({6});
  ConnectionSet cyc = validate_connection_set(c6, {Element{0, {1}}, Element{0, {5}}});
  Graph cycle = build_cayley_graph(cyc);
  AutResult aut_cycle = automorphism_group(cycle);
  if (aut_cycle.order != 12) return "6-cycle automorphism order " + std::to_string(aut_cycle.order);

  GroupSpec d3 = dihedral_over({3});
  ConnectionSet refl = validate_connection_set(
      d3, {Element{1, {0}}, Element{1, {1}}, Element{1, {2}}});
  long k33 = automorphism_group(build_cayley_graph(refl)).order;
  if (k33 != 72) return "complete bipartite automorphism order " + std::to_string(k33);

  GroupSpec c4 = abelian_spec({4});
  ConnectionSet full = validate_connection_set(
      c4, {Element{0, {1}}, Element{0, {2}}, Element{0, {3}}});
  long k4 = automorphism_group(build_cayley_graph(full)).order;
  if (k4 != 24) return "complete graph automorphism order " + std::to_string(k4);

  RegularSubgroupReport rep = enumerate_regular_subgroups(cycle, aut_cycle);
  std::set<std::string> types;
  for (const auto& sub : rep.subgroups) types.insert(sub.type.str());
  if (!types.count("C6") || !types.count("dih(C3)")) {
    std::string list;
    for (const auto& t : types) list += t + " ";
    return "6-cycle regular subgroup types are " + list;
  }
  return "";
}

std::string criterion_determinism() {
  auto counterexample_report = [] { return run_text({"counterexample"}); };
  auto sanity_report = [] {
    return run_text({"autgrp", "--group", "C6", "--set", "(1);(5)"}) +
           run_text({"autgrp", "--group", "dih(C3)", "--set", "x(0);x(1);x(2)"}) +
           run_text({"autgrp", "--group", "C4", "--set", "(1);(2);(3)"}) +
           run_text({"regular", "--group", "C6", "--set", "(1);(5)"});
  };
  if (counterexample_report() != counterexample_report())
    return "counterexample reports differ between runs";
  if (sanity_report() != sanity_report()) return "sanity reports differ between runs";

  if (const char* cli = std::getenv("CAYREP_CLI")) {
    std::string bin = std::string("'") + cli + "'";
    auto a1 = capture(bin + " counterexample");
    auto a2 = capture(bin + " counterexample");
    if (!a1 || !a2) return "running the command-line binary failed";
    if (*a1 != *a2) return "binary counterexample reports differ between runs";
    std::string cmd = bin + " regular --group C6 --set '(1);(5)'";
    auto b1 = capture(cmd);
    auto b2 = capture(cmd);
    if (!b1 || !b2) return "running the command-line binary failed";
    if (*b1 != *b2) return "binary regular reports differ between runs";
  }
  return "";
}

std::string guarded(std::string (*fn)()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return std::string("unexpected error: ") + e.what();
  }
}

}  // namespace

int main() {
  Collection col;
  std::vector<RegularAction> sweep_actions;

  report(1, "counterexample", guarded(criterion_counterexample));

  std::string sweep;
  try {
    sweep = criterion_dihedral_sweep(sweep_actions, col);
  } catch (const std::exception& e) {
    sweep = std::string("unexpected error: ") + e.what();
  }
  report(2, "dihedral-sweep", sweep);

  std::string invariants;
  try {
    invariants = criterion_dihedral_invariants(sweep_actions);
  } catch (const std::exception& e) {
    invariants = std::string("unexpected error: ") + e.what();
  }
  report(3, "dihedral-invariants", invariants);

  std::string corollary;
  try {
    corollary = criterion_corollary_types(col);
  } catch (const std::exception& e) {
    corollary = std::string("unexpected error: ") + e.what();
  }
  report(4, "corollary-types", corollary);

  std::string abelian;
  try {
    abelian = criterion_abelian_actions(col);
  } catch (const std::exception& e) {
    abelian = std::string("unexpected error: ") + e.what();
  }
  report(5, "abelian-actions", abelian);

  report(6, "no-witness-scan", guarded(criterion_no_witness_scan));

  std::string cross;
  try {
    cross = criterion_cross_validation(col);
  } catch (const std::exception& e) {
    cross = std::string("unexpected error: ") + e.what();
  }
  report(7, "oracle-cross-validation", cross);

  report(8, "oracle-sanity", guarded(criterion_oracle_sanity));
  report(9, "determinism", guarded(criterion_determinism));

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return failures == 0 ? 0 : 1;
}
