#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "error.hpp"
#include "group.hpp"
#include "group_text.hpp"
#include "perm.hpp"

// Explicit regular subgroups of Cayley graph automorphism groups, built in
// closed form rather than by search:
//
//  * dihedral_action_on_abelian: the Cayley graph of an abelian group with a
//    factor of even 2-power order carries a regular generalized dihedral
//    group of automorphisms, generated by the right translations of an
//    index-2 subgroup together with a twisted inversion.
//
//  * abelian_action_on_dihedral: the Cayley graph of a generalized dihedral
//    group carries a regular abelian group of automorphisms whenever the
//    connection set admits a witness element making a piecewise left
//    multiplication an automorphism.
//
// Every construction verifies its own output (automorphism property,
// regularity, isomorphism type, and the algebraic identities that make the
// argument work) and throws InternalVerificationFailed on any miss.

namespace cayrep {

struct LabeledPerm {
  std::string label;
  Permutation perm;
};

// A regular group of automorphisms of some graph, carried by its generators.
struct RegularAction {
  int degree = 0;
  std::vector<LabeledPerm> generators;
  PermSet group;        // closure of the generators, identity first
  GroupType group_type; // classified from the closure
};

namespace detail {

inline PermSet generator_set(int degree, const std::vector<LabeledPerm>& gens) {
  PermSet s;
  s.degree = degree;
  for (const auto& g : gens) s.elements.push_back(g.perm);
  return s;
}

[[noreturn]] inline void self_check_failed(const std::string& what) {
  throw InternalVerificationFailed("construction self-check failed: " + what);
}

inline void verify_regular_automorphisms(const Graph& graph, const RegularAction& act) {
  for (const auto& g : act.generators)
    if (!is_automorphism(graph, g.perm))
      self_check_failed("generator " + g.label + " is not an automorphism");
  if (!is_regular(act.group)) self_check_failed("the generated group is not regular");
}

}  // namespace detail

// The distinct 2-power factor orders of an abelian spec, one choice per
// value, first factor of each value wins. Scanning order is left to right.
inline std::vector<FactorChoice> split_choices(const GroupSpec& spec) {
  if (spec.dihedral())
    throw MismatchedSpec("factor splitting applies to abelian groups");
  std::vector<FactorChoice> out;
  std::set<int> seen;
  for (int i = 0; i < static_cast<int>(spec.orders.size()); ++i)
    if (is_power_of_two(spec.orders[i]) && seen.insert(spec.orders[i]).second)
      out.push_back(make_factor_choice(spec, i));
  return out;
}

// Cyclic orders of the index-2 subgroup H: the chosen factor halved, trivial
// factors dropped.
inline std::vector<int> index_two_subgroup_orders(const GroupSpec& spec,
                                                  const FactorChoice& ch) {
  std::vector<int> h_orders;
  for (int i = 0; i < static_cast<int>(spec.orders.size()); ++i) {
    int d = i == ch.index ? spec.orders[i] / 2 : spec.orders[i];
    if (d > 1) h_orders.push_back(d);
  }
  return h_orders;
}

// Isomorphism type dihedral_action_on_abelian must produce for this choice:
// dih(H) where H halves the chosen factor.
inline GroupType expected_dihedral_action_type(const GroupSpec& spec, const FactorChoice& ch) {
  std::vector<int> h_orders = index_two_subgroup_orders(spec, ch);
  if (h_orders.empty()) return GroupType::abelian({2});
  return dihedral_type_over_orders(h_orders);
}

// Builds the regular generalized dihedral action on the Cayley graph of an
// abelian group. The chosen cyclic factor <c> must have 2-power order 2^k
// with k >= 1; H is the index-2 subgroup <c^2> x (other factors), realized
// as the elements whose chosen residue is even. Generators are the right
// translations alpha_h: z -> z*h for h in H and the twisted inversion
// beta: z -> z^{-1}*c. The connection set plays no role in the group being
// generated; it only has to be a valid connection set, which is exactly why
// the action exists for every such graph.
inline RegularAction dihedral_action_on_abelian(const ConnectionSet& s,
                                                const FactorChoice& choice) {
  const GroupSpec& spec = s.spec;
  if (spec.dihedral())
    throw MismatchedSpec("this construction expects an abelian group");
  FactorChoice ch = make_factor_choice(spec, choice.index);

  long n = spec.order();
  std::vector<Element> els = enumerate_elements(spec);
  Element c = identity(spec);
  c.residues[ch.index] = 1;

  RegularAction act;
  act.degree = static_cast<int>(n);
  for (const auto& h : els) {
    if (h.residues[ch.index] % 2 != 0) continue;
    Permutation p;
    p.images.resize(n);
    for (long z = 0; z < n; ++z)
      p.images[z] = element_index(spec, multiply(spec, els[z], h));
    act.generators.push_back({"alpha(" + to_string(spec, h) + ")", std::move(p)});
  }
  Permutation beta;
  beta.images.resize(n);
  for (long z = 0; z < n; ++z)
    beta.images[z] = element_index(spec, multiply(spec, invert(spec, els[z]), c));
  act.generators.push_back({"beta", std::move(beta)});

  act.group = generate_closure(detail::generator_set(act.degree, act.generators));
  act.group_type = classify(multiplication_table(act.group));

  // The identities that make the generated group dihedral over H rather
  // than something larger: beta is an involution and conjugating a
  // translation by it inverts it.
  const Permutation& b = act.generators.back().perm;
  if (compose(b, b) != identity_perm(act.degree))
    detail::self_check_failed("beta is not an involution");
  for (const auto& g : act.generators) {
    if (g.label == "beta") continue;
    if (compose(b, compose(g.perm, b)) != invert(g.perm))
      detail::self_check_failed("beta does not invert " + g.label);
  }

  Graph graph = build_cayley_graph(s);
  detail::verify_regular_automorphisms(graph, act);
  GroupType expected = expected_dihedral_action_type(spec, ch);
  if (act.group_type != expected)
    detail::self_check_failed("action has type " + act.group_type.str() + ", expected " +
                              expected.str());
  return act;
}

// One dihedral action per distinct 2-power among the factor orders. The
// actions for two factors of the same order are conjugate, so only the
// first factor of each distinct order is used.
inline std::vector<std::pair<FactorChoice, RegularAction>> dihedral_actions_per_two_power(
    const ConnectionSet& s) {
  const GroupSpec& spec = s.spec;
  std::vector<FactorChoice> choices = split_choices(spec);
  if (choices.empty()) {
    if (spec.abelian_order() % 2 != 0)
      throw OddOrder("group of odd order " + std::to_string(spec.abelian_order()) +
                     " admits no factor of even 2-power order");
    throw OddOrderFactor(
        "no declared factor has 2-power order; split one off in the declaration "
        "(for example C6 as C2xC3)");
  }
  std::vector<std::pair<FactorChoice, RegularAction>> out;
  out.reserve(choices.size());
  for (const auto& ch : choices) out.emplace_back(ch, dihedral_action_on_abelian(s, ch));
  return out;
}

// ---------------------------------------------------------------------------
// The dihedral-side construction.
// ---------------------------------------------------------------------------

// Input to abelian_action_on_dihedral: a generalized dihedral group whose
// abelian part splits as <c> x A with c of order 2^k. factor picks c's
// cyclic factor; a disengaged factor means k = 0, c = identity, A the whole
// abelian part. witness is the element y of the reflecting coset that makes
// the construction work, once one is known.
struct Thm3Instance {
  GroupSpec spec;
  std::optional<FactorChoice> factor;
  std::optional<Element> witness;
};

namespace detail {

inline void check_dihedral_instance(const Thm3Instance& inst) {
  if (!inst.spec.dihedral())
    throw MismatchedSpec("this construction expects a dih(...) group");
  if (inst.factor) make_factor_choice(inst.spec, inst.factor->index);
}

inline Element distinguished_c(const Thm3Instance& inst) {
  Element c = identity(inst.spec);
  if (inst.factor) c.residues[inst.factor->index] = 1;
  return c;
}

// The witness condition, checked over the abelian part: with y = x*w, every
// g must satisfy  y*g in S  iff  y*g^{-1}*c in S. Both products stay in the
// reflecting coset, so only the flip-1 part of S matters.
inline bool witness_holds(const GroupSpec& spec, const std::set<std::vector<int>>& sx,
                          const std::vector<int>& w, const std::vector<int>& c) {
  size_t r = spec.orders.size();
  std::vector<int> g(r, 0), left(r), right(r);
  for (;;) {
    for (size_t i = 0; i < r; ++i) {
      left[i] = mod(static_cast<long>(w[i]) + g[i], spec.orders[i]);
      right[i] = mod(static_cast<long>(w[i]) - g[i] + c[i], spec.orders[i]);
    }
    if (sx.count(left) != sx.count(right)) return false;
    int i = static_cast<int>(r) - 1;
    for (; i >= 0; --i) {
      if (++g[i] < spec.orders[i]) break;
      g[i] = 0;
    }
    if (i < 0) return true;
  }
}

inline std::set<std::vector<int>> reflecting_part(const ConnectionSet& s) {
  std::set<std::vector<int>> sx;
  for (const auto& e : s.elements)
    if (e.flip) sx.insert(e.residues);
  return sx;
}

}  // namespace detail

// All witnesses for the given instance, in enumeration order of the
// abelian part.
inline std::vector<Element> reflection_witnesses(const Thm3Instance& inst,
                                                 const ConnectionSet& s) {
  detail::check_dihedral_instance(inst);
  if (!(s.spec == inst.spec))
    throw MismatchedSpec("connection set and instance use different groups");
  std::set<std::vector<int>> sx = detail::reflecting_part(s);
  std::vector<int> c = detail::distinguished_c(inst).residues;
  std::vector<Element> out;
  size_t r = inst.spec.orders.size();
  std::vector<int> w(r, 0);
  for (;;) {
    if (detail::witness_holds(inst.spec, sx, w, c)) out.push_back(Element{1, w});
    int i = static_cast<int>(r) - 1;
    for (; i >= 0; --i) {
      if (++w[i] < inst.spec.orders[i]) break;
      w[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// First witness in enumeration order, if any.
inline std::optional<Element> find_reflection_witness(const Thm3Instance& inst,
                                                      const ConnectionSet& s) {
  detail::check_dihedral_instance(inst);
  if (!(s.spec == inst.spec))
    throw MismatchedSpec("connection set and instance use different groups");
  std::set<std::vector<int>> sx = detail::reflecting_part(s);
  std::vector<int> c = detail::distinguished_c(inst).residues;
  size_t r = inst.spec.orders.size();
  std::vector<int> w(r, 0);
  for (;;) {
    if (detail::witness_holds(inst.spec, sx, w, c)) return Element{1, w};
    int i = static_cast<int>(r) - 1;
    for (; i >= 0; --i) {
      if (++w[i] < inst.spec.orders[i]) break;
      w[i] = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

// Isomorphism type abelian_action_on_dihedral must produce: the cyclic part
// of order 2^{k+1} times the untouched factors.
inline GroupType expected_abelian_action_type(const Thm3Instance& inst) {
  std::vector<int> orders;
  int skip = inst.factor ? inst.factor->index : -1;
  for (int i = 0; i < static_cast<int>(inst.spec.orders.size()); ++i)
    if (i != skip) orders.push_back(inst.spec.orders[i]);
  orders.push_back(inst.factor ? 2 * inst.spec.orders[inst.factor->index] : 2);
  return GroupType::abelian(invariant_factors(orders));
}

// Builds the regular abelian action on the Cayley graph of a generalized
// dihedral group, given a verified witness. Generators are the right
// translations alpha_a for a in A and the piecewise left multiplication
//   beta(z) = y*z     for z in the abelian part,
//   beta(z) = y*c*z   for z in the reflecting coset.
// beta is built from the witness y, not from the reflecting generator x
// itself; the two agree only when y happens to be x. Squaring beta lands on
// the right translation by c^{-1}, so beta has order 2^{k+1} and together
// with the alpha_a generates a group of order 2|G| isomorphic to
// C_{2^{k+1}} x A.
inline RegularAction abelian_action_on_dihedral(const Thm3Instance& inst,
                                                const ConnectionSet& s) {
  detail::check_dihedral_instance(inst);
  if (!(s.spec == inst.spec))
    throw MismatchedSpec("connection set and instance use different groups");
  if (!inst.witness) throw Error("this construction needs a witness element");
  const GroupSpec& spec = inst.spec;
  const Element& y = *inst.witness;
  detail::check_element(spec, y);
  if (y.flip != 1)
    throw WitnessInvalid("witness " + to_string(spec, y) + " is not in the reflecting coset");
  Element c = detail::distinguished_c(inst);
  if (!detail::witness_holds(spec, detail::reflecting_part(s), y.residues, c.residues))
    throw WitnessInvalid("witness " + to_string(spec, y) + " fails its defining condition");

  long n = spec.order();
  long na = spec.abelian_order();
  std::vector<Element> els = enumerate_elements(spec);

  RegularAction act;
  act.degree = static_cast<int>(n);
  int skip = inst.factor ? inst.factor->index : -1;
  for (long i = 0; i < na; ++i) {
    const Element& a = els[i];
    if (skip >= 0 && a.residues[skip] != 0) continue;
    Permutation p;
    p.images.resize(n);
    for (long z = 0; z < n; ++z)
      p.images[z] = element_index(spec, multiply(spec, els[z], a));
    act.generators.push_back({"alpha(" + to_string(spec, a) + ")", std::move(p)});
  }
  Element yc = multiply(spec, y, c);
  Permutation beta;
  beta.images.resize(n);
  for (long z = 0; z < n; ++z) {
    const Element& lhs = els[z].flip ? yc : y;
    beta.images[z] = element_index(spec, multiply(spec, lhs, els[z]));
  }
  act.generators.push_back({"beta", std::move(beta)});

  act.group = generate_closure(detail::generator_set(act.degree, act.generators));
  act.group_type = classify(multiplication_table(act.group));

  const Permutation& b = act.generators.back().perm;
  // beta swaps the abelian part with the reflecting coset.
  for (long z = 0; z < n; ++z)
    if ((b.images[z] >= na) != (z < na))
      detail::self_check_failed("beta does not swap the cosets");
  // beta^2 is the right translation by c^{-1}, which pins beta's order.
  Element cinv = invert(spec, c);
  Permutation rho_cinv;
  rho_cinv.images.resize(n);
  for (long z = 0; z < n; ++z)
    rho_cinv.images[z] = element_index(spec, multiply(spec, els[z], cinv));
  if (compose(b, b) != rho_cinv)
    detail::self_check_failed("beta squared is not the expected translation");
  long k = inst.factor ? inst.factor->k : 0;
  if (perm_order(b) != (1L << (k + 1)))
    detail::self_check_failed("beta has the wrong order");
  for (const auto& g : act.generators)
    if (compose(b, g.perm) != compose(g.perm, b))
      detail::self_check_failed("beta does not commute with " + g.label);

  Graph graph = build_cayley_graph(s);
  detail::verify_regular_automorphisms(graph, act);
  GroupType expected = expected_abelian_action_type(inst);
  if (act.group_type != expected)
    detail::self_check_failed("action has type " + act.group_type.str() + ", expected " +
                              expected.str());
  return act;
}

}  // namespace cayrep
