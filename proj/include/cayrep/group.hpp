#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace cayrep {

enum class GroupKind { Abelian, GeneralizedDihedral };

// A finite abelian group presented as a direct product of cyclic factors,
// or the generalized dihedral group over such a product. Factor order is
// kept as declared, so C2xC4 and C4xC2 are distinct specs for the same
// abstract group.
struct GroupSpec {
  GroupKind kind = GroupKind::Abelian;
  std::vector<int> orders;

  bool dihedral() const { return kind == GroupKind::GeneralizedDihedral; }

  // Order of the abelian part (the product of the factor orders).
  long abelian_order() const {
    long n = 1;
    for (int d : orders) n *= d;
    return n;
  }

  // Order of the group itself.
  long order() const { return dihedral() ? 2 * abelian_order() : abelian_order(); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

inline void check_spec_factors(const std::vector<int>& orders) {
  if (orders.empty()) throw Error("group spec needs at least one cyclic factor");
  for (int d : orders)
    if (d < 2) throw Error("cyclic factor order must be at least 2");
}

}  // namespace detail

inline GroupSpec abelian_spec(std::vector<int> orders) {
  detail::check_spec_factors(orders);
  return {GroupKind::Abelian, std::move(orders)};
}

inline GroupSpec dihedral_over(std::vector<int> orders) {
  detail::check_spec_factors(orders);
  return {GroupKind::GeneralizedDihedral, std::move(orders)};
}

// One group element. residues[i] lives in Z_{orders[i]}. For a generalized
// dihedral group the element is x^flip * a where x is the reflecting
// involution and a the abelian part; abelian groups keep flip = 0.
//
// Multiplication follows the normal form of the relation a*x = x*a^{-1}:
//   (f1, a1) * (f2, a2) = (f1 xor f2, s*a1 + a2) with s = -1 iff f2 = 1.
struct Element {
  int flip = 0;
  std::vector<int> residues;

  friend bool operator==(const Element&, const Element&) = default;
  // Orders by flip, then residues lexicographically; this coincides with
  // enumeration order.
  friend auto operator<=>(const Element&, const Element&) = default;
};

namespace detail {

inline int mod(long v, int m) {
  long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

inline void check_element(const GroupSpec& spec, const Element& a) {
  if (a.residues.size() != spec.orders.size())
    throw MismatchedSpec("element has " + std::to_string(a.residues.size()) +
                         " residues, group has " + std::to_string(spec.orders.size()) +
                         " factors");
  if (a.flip != 0 && !spec.dihedral())
    throw MismatchedSpec("flip bit set on an element of an abelian group");
  for (size_t i = 0; i < a.residues.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= spec.orders[i])
      throw MismatchedSpec("residue " + std::to_string(a.residues[i]) +
                           " out of range for factor of order " +
                           std::to_string(spec.orders[i]));
}

}  // namespace detail

inline Element identity(const GroupSpec& spec) {
  return {0, std::vector<int>(spec.orders.size(), 0)};
}

inline bool is_identity(const Element& a) {
  if (a.flip != 0) return false;
  return std::all_of(a.residues.begin(), a.residues.end(), [](int r) { return r == 0; });
}

inline Element multiply(const GroupSpec& spec, const Element& a, const Element& b) {
  detail::check_element(spec, a);
  detail::check_element(spec, b);
  int s = (spec.dihedral() && b.flip != 0) ? -1 : 1;
  Element r;
  r.flip = a.flip ^ b.flip;
  r.residues.resize(spec.orders.size());
  for (size_t i = 0; i < spec.orders.size(); ++i)
    r.residues[i] = detail::mod(static_cast<long>(s) * a.residues[i] + b.residues[i],
                                spec.orders[i]);
  return r;
}

inline Element invert(const GroupSpec& spec, const Element& a) {
  detail::check_element(spec, a);
  if (a.flip != 0) return a;  // x*a squares to the identity, so it is its own inverse
  Element r = a;
  for (size_t i = 0; i < r.residues.size(); ++i)
    r.residues[i] = detail::mod(-static_cast<long>(r.residues[i]), spec.orders[i]);
  return r;
}

inline Element power(const GroupSpec& spec, const Element& a, long e) {
  Element acc = identity(spec);
  if (e < 0) return power(spec, invert(spec, a), -e);
  Element base = a;
  while (e > 0) {
    if (e & 1) acc = multiply(spec, acc, base);
    base = multiply(spec, base, base);
    e >>= 1;
  }
  return acc;
}

inline long element_order(const GroupSpec& spec, const Element& a) {
  detail::check_element(spec, a);
  if (a.flip != 0) return 2;
  long ord = 1;
  for (size_t i = 0; i < spec.orders.size(); ++i) {
    long oi = spec.orders[i] / std::gcd(spec.orders[i], a.residues[i]);
    ord = std::lcm(ord, oi);
  }
  return ord;
}

// All elements in a fixed canonical order: the flip = 0 block first, then
// (for dihedral groups) the flip = 1 block, each block running through the
// residue vectors as a mixed-radix odometer with the leftmost factor most
// significant. Index 0 is always the identity.
inline std::vector<Element> enumerate_elements(const GroupSpec& spec) {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(spec.order()));
  int flips = spec.dihedral() ? 2 : 1;
  for (int f = 0; f < flips; ++f) {
    Element cur{f, std::vector<int>(spec.orders.size(), 0)};
    for (;;) {
      out.push_back(cur);
      int i = static_cast<int>(spec.orders.size()) - 1;
      for (; i >= 0; --i) {
        if (++cur.residues[i] < spec.orders[i]) break;
        cur.residues[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return out;
}

// Position of an element in enumerate_elements order, computed arithmetically.
inline int element_index(const GroupSpec& spec, const Element& a) {
  detail::check_element(spec, a);
  long idx = 0;
  for (size_t i = 0; i < spec.orders.size(); ++i) idx = idx * spec.orders[i] + a.residues[i];
  if (a.flip != 0) idx += spec.abelian_order();
  return static_cast<int>(idx);
}

inline Element element_at(const GroupSpec& spec, int index) {
  long n = spec.order(), na = spec.abelian_order();
  if (index < 0 || index >= n) throw Error("element index out of range");
  Element r{index >= na ? 1 : 0, std::vector<int>(spec.orders.size(), 0)};
  long rem = index % na;
  for (int i = static_cast<int>(spec.orders.size()) - 1; i >= 0; --i) {
    r.residues[i] = static_cast<int>(rem % spec.orders[i]);
    rem /= spec.orders[i];
  }
  return r;
}

// A cyclic factor of 2-power order 2^k (k >= 1) singled out as the
// distinguished factor of the constructions.
struct FactorChoice {
  int index = 0;
  int k = 1;

  friend bool operator==(const FactorChoice&, const FactorChoice&) = default;
};

inline bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

inline FactorChoice make_factor_choice(const GroupSpec& spec, int index) {
  if (index < 0 || index >= static_cast<int>(spec.orders.size()))
    throw MismatchedSpec("factor index " + std::to_string(index) + " out of range");
  int d = spec.orders[index];
  if (!is_power_of_two(d))
    throw OddOrderFactor("factor " + std::to_string(index) + " has order " +
                         std::to_string(d) + ", which is not a power of two");
  int k = 0;
  while ((1 << k) < d) ++k;
  return {index, k};
}

// Isomorphism type of a finite group, as far as this library can tell:
// abelian groups by their invariant factor list, generalized dihedral groups
// by the invariant factors of the inverted subgroup, everything else bucketed
// under a hash of its multiplication table (layout-sensitive, so equal hashes
// mean equal tables, not merely isomorphic groups).
struct GroupType {
  enum class Tag { AbelianInvariants, GeneralizedDihedralOver, Other };

  Tag tag = Tag::Other;
  std::vector<int> invariants;  // ascending, each dividing the next
  std::uint64_t hash = 0;       // Tag::Other only

  static GroupType abelian(std::vector<int> inv) {
    return {Tag::AbelianInvariants, std::move(inv), 0};
  }
  static GroupType dihedral_over(std::vector<int> inv) {
    return {Tag::GeneralizedDihedralOver, std::move(inv), 0};
  }
  static GroupType other(std::uint64_t h) { return {Tag::Other, {}, h}; }

  std::string str() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType&, const GroupType&) = default;
};

namespace detail {

inline std::vector<std::pair<int, int>> prime_factorization(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int int_pow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

// Invariant factor decomposition of a direct product of cyclic groups with
// the given orders. Result is ascending with each entry dividing the next,
// e.g. {9, 3} -> {3, 9} and {2, 3} -> {6}.
inline std::vector<int> invariant_factors(const std::vector<int>& orders) {
  std::map<int, std::vector<int>> exps;  // prime -> exponents, later sorted descending
  for (int d : orders) {
    if (d < 1) throw Error("cyclic order must be positive");
    for (auto [p, e] : detail::prime_factorization(d)) exps[p].push_back(e);
  }
  size_t rank = 0;
  for (auto& [p, v] : exps) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    rank = std::max(rank, v.size());
  }
  std::vector<int> desc;
  for (size_t i = 0; i < rank; ++i) {
    int d = 1;
    for (auto& [p, v] : exps)
      if (i < v.size()) d *= detail::int_pow(p, v[i]);
    desc.push_back(d);
  }
  std::reverse(desc.begin(), desc.end());
  return desc;
}

// Type of the generalized dihedral group over an abelian group with the
// given cyclic orders. dih(A) is abelian exactly when A is elementary
// abelian 2 (inverting is then trivial and dih(A) = C2 x A); an empty order
// list means A is trivial and dih(A) = C2.
inline GroupType dihedral_type_over_orders(const std::vector<int>& orders) {
  std::vector<int> inv = invariant_factors(orders);
  if (std::all_of(inv.begin(), inv.end(), [](int d) { return d == 2; })) {
    inv.push_back(2);
    return GroupType::abelian(std::move(inv));
  }
  return GroupType::dihedral_over(std::move(inv));
}

// Isomorphism type of the group a GroupSpec declares, before any computation.
inline GroupType spec_type(const GroupSpec& spec) {
  if (!spec.dihedral()) return GroupType::abelian(invariant_factors(spec.orders));
  return dihedral_type_over_orders(spec.orders);
}

// ---------------------------------------------------------------------------
// Multiplication tables. table[i][j] is the index of element i * element j.
// ---------------------------------------------------------------------------

using MulTable = std::vector<std::vector<int>>;

inline std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) {
    h ^= (v >> (8 * b)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t table_hash(const MulTable& t) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, t.size());
  for (const auto& row : t)
    for (int v : row) h = fnv1a(h, static_cast<std::uint64_t>(v));
  return h;
}

inline constexpr long kMaxTableOrder = 256;

namespace detail {

inline int identity_of(const MulTable& t) {
  int n = static_cast<int>(t.size());
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = t[i][j] == j && t[j][i] == j;
    if (ok) return i;
  }
  throw NotAGroup("table has no two-sided identity");
}

}  // namespace detail

// Checks the group axioms, throwing NotAGroup on the first violation.
// Associativity is checked on all n^3 triples up to n = 64 and on a fixed
// pseudorandom sample of triples beyond that.
inline void check_group_table(const MulTable& t) {
  long n = static_cast<long>(t.size());
  if (n == 0) throw NotAGroup("empty multiplication table");
  if (n > kMaxTableOrder)
    throw TooLarge("multiplication table of order " + std::to_string(n) +
                       " exceeds the table-operation limit " + std::to_string(kMaxTableOrder),
                   n);
  for (const auto& row : t) {
    if (static_cast<long>(row.size()) != n) throw NotAGroup("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
  }
  std::vector<char> seen(n);
  for (long i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (long j = 0; j < n; ++j) seen[t[i][j]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (long j = 0; j < n; ++j) seen[t[j][i]] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw NotAGroup("column " + std::to_string(i) + " is not a permutation");
  }
  detail::identity_of(t);
  auto assoc = [&](long a, long b, long c) {
    if (t[t[a][b]][c] != t[a][t[b][c]])
      throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b)
        for (long c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    auto next = [&s] {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    for (int i = 0; i < 4096; ++i) {
      long a = static_cast<long>(next() % n);
      long b = static_cast<long>(next() % n);
      long c = static_cast<long>(next() % n);
      assoc(a, b, c);
    }
  }
}

inline std::vector<long> element_orders(const MulTable& t) {
  int n = static_cast<int>(t.size());
  int e = detail::identity_of(t);
  std::vector<long> ord(n);
  for (int i = 0; i < n; ++i) {
    int x = i;
    long o = 1;
    while (x != e) {
      x = t[x][i];
      ++o;
      if (o > n) throw NotAGroup("element order exceeds group order");
    }
    ord[i] = o;
  }
  return ord;
}

namespace detail {

// Closure of a set of table indices under multiplication, as a sorted list.
inline std::vector<int> table_closure(const MulTable& t, std::vector<int> seed) {
  int n = static_cast<int>(t.size());
  std::vector<char> in(n, 0);
  std::vector<int> list;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      list.push_back(v);
    }
  };
  add(identity_of(t));
  for (int v : seed) add(v);
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < list.size(); ++j) {
      add(t[list[i]][list[j]]);
      add(t[list[j]][list[i]]);
    }
  std::sort(list.begin(), list.end());
  return list;
}

inline MulTable subtable(const MulTable& t, const std::vector<int>& members) {
  std::vector<int> local(t.size(), -1);
  for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  MulTable s(members.size(), std::vector<int>(members.size()));
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      int p = local[t[members[i]][members[j]]];
      if (p < 0) throw NotAGroup("subset is not closed under multiplication");
      s[i][j] = p;
    }
  return s;
}

inline bool table_abelian(const MulTable& t) {
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (t[i][j] != t[j][i]) return false;
  return true;
}

// Invariant factors of a group known to be abelian, recovered from how many
// elements each prime-power exponent kills: with c_j = #{x : x^(p^j) = e},
// the count of cyclic factors of p-exponent >= j is log_p(c_j) - log_p(c_{j-1}).
inline std::vector<int> abelian_invariants_of_table(const MulTable& t) {
  int n = static_cast<int>(t.size());
  std::vector<long> ord = element_orders(t);
  std::vector<int> prime_power_orders;
  for (auto [p, a] : prime_factorization(n)) {
    std::vector<int> g(a + 1, 0);  // g[j] = log_p #{x : ord(x) divides p^j}
    for (int j = 0; j <= a; ++j) {
      long pj = 1;
      for (int q = 0; q < j; ++q) pj *= p;
      long c = 0;
      for (int x = 0; x < n; ++x)
        if (pj % ord[x] == 0) ++c;
      int lg = 0;
      long v = c;
      while (v > 1) {
        if (v % p) throw NotAGroup("solution count is not a power of " + std::to_string(p));
        v /= p;
        ++lg;
      }
      g[j] = lg;
    }
    std::vector<int> at_least(a + 2, 0);  // factors with exponent >= j
    for (int j = 1; j <= a; ++j) at_least[j] = g[j] - g[j - 1];
    for (int j = 1; j <= a; ++j) {
      int exactly = at_least[j] - at_least[j + 1];
      for (int q = 0; q < exactly; ++q) prime_power_orders.push_back(int_pow(p, j));
    }
  }
  return invariant_factors(prime_power_orders);
}

}  // namespace detail

// Determines the isomorphism type of the group behind a multiplication table.
// Nonabelian groups are tested for being generalized dihedral: the elements
// of order greater than two generate the only possible inverted subgroup, so
// the test needs no search over index-2 subgroups.
inline GroupType classify(const MulTable& t) {
  check_group_table(t);
  int n = static_cast<int>(t.size());
  if (detail::table_abelian(t))
    return GroupType::abelian(detail::abelian_invariants_of_table(t));

  std::vector<long> ord = element_orders(t);
  std::vector<int> big;
  for (int i = 0; i < n; ++i)
    if (ord[i] > 2) big.push_back(i);
  std::vector<int> b = detail::table_closure(t, big);
  if (2 * b.size() == static_cast<size_t>(n)) {
    MulTable bt = detail::subtable(t, b);
    if (detail::table_abelian(bt)) {
      std::vector<char> in_b(n, 0);
      for (int v : b) in_b[v] = 1;
      int e = detail::identity_of(t);
      bool ok = true;
      int outside = -1;
      for (int i = 0; i < n && ok; ++i)
        if (!in_b[i]) {
          if (outside < 0) outside = i;
          ok = t[i][i] == e;
        }
      if (ok) {
        // One reflecting element inverting all of B is enough: the rest of
        // the coset is that element times B.
        std::vector<int> inv(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (t[i][j] == e) inv[i] = j;
        for (int v : b)
          if (t[t[outside][v]][outside] != inv[v]) {
            ok = false;
            break;
          }
      }
      if (ok) return GroupType::dihedral_over(detail::abelian_invariants_of_table(bt));
    }
  }
  return GroupType::other(table_hash(t));
}

inline std::string GroupType::str() const {
  auto join_desc = [](const std::vector<int>& inv) {
    if (inv.empty()) return std::string("C1");
    std::string s;
    for (auto it = inv.rbegin(); it != inv.rend(); ++it) {
      if (!s.empty()) s += 'x';
      s += 'C';
      s += std::to_string(*it);
    }
    return s;
  };
  switch (tag) {
    case Tag::AbelianInvariants:
      return join_desc(invariants);
    case Tag::GeneralizedDihedralOver:
      return "dih(" + join_desc(invariants) + ")";
    case Tag::Other: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "other(%016llx)",
                    static_cast<unsigned long long>(hash));
      return buf;
    }
  }
  return "?";
}

// Multiplication table of the group a GroupSpec declares, indices in enumeration order.
inline MulTable regular_representation(const GroupSpec& spec) {
  long n = spec.order();
  if (n > kMaxTableOrder)
    throw TooLarge("group of order " + std::to_string(n) +
                       " exceeds the table-operation limit " + std::to_string(kMaxTableOrder),
                   n);
  std::vector<Element> els = enumerate_elements(spec);
  MulTable t(n, std::vector<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      t[i][j] = element_index(spec, multiply(spec, els[i], els[j]));
  return t;
}

namespace detail {

struct IsoSearch {
  const MulTable& ta;
  const MulTable& tb;
  std::vector<long> orda, ordb;
  std::vector<int> gens;                   // generators of A, greedily chosen
  std::vector<std::vector<int>> levels;    // levels[i] = closure of gens[0..i], discovery order

  // Extends the partial map phi (a-index -> b-index, -1 when unset) by
  // sending generator g to h, then closes under products, checking
  // homomorphy and injectivity as it goes. Defined entries of phi cover
  // exactly the closure of the previous level plus g when this returns true.
  bool extend(std::vector<int>& phi, std::vector<char>& used, int g, int h) const {
    if (orda[g] != ordb[h]) return false;
    std::vector<int> defined;
    for (size_t i = 0; i < phi.size(); ++i)
      if (phi[i] >= 0) defined.push_back(static_cast<int>(i));
    if (phi[g] < 0) {
      if (used[h]) return false;
      phi[g] = h;
      used[h] = 1;
      defined.push_back(g);
    } else if (phi[g] != h) {
      return false;
    }
    for (size_t i = 0; i < defined.size(); ++i)
      for (size_t j = 0; j < defined.size(); ++j) {
        int p = ta[defined[i]][defined[j]];
        int q = tb[phi[defined[i]]][phi[defined[j]]];
        if (phi[p] < 0) {
          if (used[q]) return false;
          phi[p] = q;
          used[q] = 1;
          defined.push_back(p);
        } else if (phi[p] != q) {
          return false;
        }
      }
    return true;
  }

  bool search(size_t level, const std::vector<int>& phi, const std::vector<char>& used) const {
    if (level == gens.size()) return true;
    int g = gens[level];
    for (int h = 0; h < static_cast<int>(tb.size()); ++h) {
      if (ordb[h] != orda[g]) continue;
      std::vector<int> phi2 = phi;
      std::vector<char> used2 = used;
      if (extend(phi2, used2, g, h) && search(level + 1, phi2, used2)) return true;
    }
    return false;
  }
};

}  // namespace detail

// Whether two multiplication tables present isomorphic groups. Both tables
// are validated first. Intended for the small groups this library handles;
// the search is exact, with order-profile pruning.
inline bool is_isomorphic(const MulTable& ta, const MulTable& tb) {
  check_group_table(ta);
  check_group_table(tb);
  if (ta.size() != tb.size()) return false;
  int n = static_cast<int>(ta.size());

  detail::IsoSearch s{ta, tb, element_orders(ta), element_orders(tb), {}, {}};
  {
    std::vector<long> pa = s.orda, pb = s.ordb;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
  }
  if (detail::table_abelian(ta) != detail::table_abelian(tb)) return false;
  auto center_size = [](const MulTable& t) {
    int c = 0;
    for (size_t i = 0; i < t.size(); ++i) {
      bool central = true;
      for (size_t j = 0; j < t.size() && central; ++j) central = t[i][j] == t[j][i];
      if (central) ++c;
    }
    return c;
  };
  if (center_size(ta) != center_size(tb)) return false;

  std::vector<char> in_closure(n, 0);
  std::vector<int> closure = detail::table_closure(ta, {});
  for (int v : closure) in_closure[v] = 1;
  for (int i = 0; i < n; ++i) {
    if (in_closure[i]) continue;
    s.gens.push_back(i);
    std::vector<int> seed = s.gens;
    closure = detail::table_closure(ta, seed);
    std::fill(in_closure.begin(), in_closure.end(), 0);
    for (int v : closure) in_closure[v] = 1;
  }

  std::vector<int> phi(n, -1);
  std::vector<char> used(n, 0);
  int ea = detail::identity_of(ta), eb = detail::identity_of(tb);
  phi[ea] = eb;
  used[eb] = 1;
  return s.search(0, phi, used);
}

}  // namespace cayrep
