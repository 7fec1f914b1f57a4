#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "group.hpp"

namespace cayrep {

// A permutation of {0, ..., n-1} stored as its image list: images[v] is
// where v is sent.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int v) const { return images[v]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline Permutation identity_perm(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

inline void check_permutation(const Permutation& p) {
  std::vector<char> seen(p.images.size(), 0);
  for (int v : p.images) {
    if (v < 0 || v >= p.degree() || seen[v])
      throw Error("image list is not a permutation");
    seen[v] = 1;
  }
}

// compose(p, q) applies q first: the result sends v to p(q(v)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("composing permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  Permutation r;
  r.images.resize(p.degree());
  for (int v = 0; v < p.degree(); ++v) r.images[v] = p.images[q.images[v]];
  return r;
}

inline Permutation invert(const Permutation& p) {
  Permutation r;
  r.images.resize(p.degree());
  for (int v = 0; v < p.degree(); ++v) r.images[p.images[v]] = v;
  return r;
}

inline long perm_order(const Permutation& p) {
  long ord = 1;
  std::vector<char> seen(p.images.size(), 0);
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    long len = 0;
    for (int u = v; !seen[u]; u = p.images[u]) {
      seen[u] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

inline bool is_fixed_point_free(const Permutation& p) {
  for (int v = 0; v < p.degree(); ++v)
    if (p.images[v] == v) return false;
  return true;
}

// Text form: comma-separated image list in brackets, e.g. [1,2,0].
inline std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (int v = 0; v < p.degree(); ++v) {
    if (v) s += ',';
    s += std::to_string(p.images[v]);
  }
  s += ']';
  return s;
}

// A set of permutations of one degree. group_closed marks sets produced by a
// closure computation (or otherwise known to form a group); the predicates
// that only make sense for groups insist on it.
struct PermSet {
  int degree = 0;
  std::vector<Permutation> elements;
  bool group_closed = false;

  long size() const { return static_cast<long>(elements.size()); }
};

namespace detail {

struct ImageHash {
  size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int x : v) h = fnv1a(h, static_cast<std::uint64_t>(x));
    return static_cast<size_t>(h);
  }
};

}  // namespace detail

inline constexpr long kDefaultClosureCap = 1L << 20;

// Group generated by gens, found by breadth-first products from the
// identity, taking generators in their given order. Element order in the
// result is the discovery order, so it is deterministic; the identity comes
// first. Throws CapExceeded once more than cap distinct elements appear.
inline PermSet generate_closure(const PermSet& gens, long cap = kDefaultClosureCap) {
  if (gens.elements.empty()) throw Error("closure needs at least one generator");
  for (const auto& g : gens.elements) {
    if (g.degree() != gens.degree)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match set degree " + std::to_string(gens.degree));
    check_permutation(g);
  }
  PermSet out;
  out.degree = gens.degree;
  out.group_closed = true;
  std::unordered_map<std::vector<int>, int, detail::ImageHash> seen;
  auto add = [&](const Permutation& p) {
    auto [it, fresh] = seen.emplace(p.images, static_cast<int>(out.elements.size()));
    if (fresh) {
      out.elements.push_back(p);
      if (out.size() > cap)
        throw CapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements", cap);
    }
    return fresh;
  };
  add(identity_perm(gens.degree));
  for (size_t i = 0; i < out.elements.size(); ++i)
    for (const auto& g : gens.elements) add(compose(out.elements[i], g));
  return out;
}

namespace detail {

inline void require_group(const PermSet& s, const char* op) {
  if (!s.group_closed)
    throw Error(std::string(op) + " expects a group-closed permutation set");
  if (s.elements.empty()) throw Error(std::string(op) + " expects a nonempty set");
}

}  // namespace detail

inline bool is_transitive(const PermSet& s) {
  detail::require_group(s, "is_transitive");
  std::vector<char> hit(s.degree, 0);
  long count = 0;
  for (const auto& p : s.elements)
    if (!hit[p.images[0]]) {
      hit[p.images[0]] = 1;
      ++count;
    }
  return count == s.degree;
}

// Regular means transitive with exactly as many elements as points; for a
// group action the two together force sharp transitivity.
inline bool is_regular(const PermSet& s) {
  detail::require_group(s, "is_regular");
  return s.size() == s.degree && is_transitive(s);
}

// Multiplication table over the set's own element order, with
// table[i][j] = index of elements[i] composed with elements[j].
inline MulTable multiplication_table(const PermSet& s) {
  detail::require_group(s, "multiplication_table");
  long n = s.size();
  if (n > kMaxTableOrder)
    throw TooLarge("permutation group of order " + std::to_string(n) +
                       " exceeds the table-operation limit " + std::to_string(kMaxTableOrder),
                   n);
  std::unordered_map<std::vector<int>, int, detail::ImageHash> index;
  for (long i = 0; i < n; ++i) index.emplace(s.elements[i].images, static_cast<int>(i));
  MulTable t(n, std::vector<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      auto it = index.find(compose(s.elements[i], s.elements[j]).images);
      if (it == index.end())
        throw NotAGroup("set is not closed under composition");
      t[i][j] = it->second;
    }
  return t;
}

}  // namespace cayrep
