#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cayley.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "perm.hpp"

// Exhaustive automorphism and regular-subgroup machinery for small graphs.
// This is the ground truth the closed-form constructions are checked
// against, so it favors directness over speed: the full automorphism group
// is enumerated element by element with a partition-refinement backtracking
// search, and regular subgroups are found by closing candidate sets of
// fixed-point-free automorphisms.

namespace cayrep {

inline constexpr int kMaxAutVertices = 64;

// FNV-1a over the canonical edge serialization, as 16 hex digits. Stable
// across runs and platforms.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, static_cast<std::uint64_t>(g.n));
  for (auto [u, v] : edge_list(g)) {
    h = fnv1a(h, static_cast<std::uint64_t>(u));
    h = fnv1a(h, static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct AutResult {
  std::string hash;  // graph_hash of the input
  long order = 0;
  PermSet elements;  // the whole group, identity first, deterministic order
};

namespace detail {

// Ordered partition of the vertices; cells keep their vertices ascending.
using Cells = std::vector<std::vector<int>>;

struct AutSearch {
  int n = 0;
  std::vector<std::uint64_t> adj;  // one neighbor bitmask per vertex
  long cap = 0;
  std::vector<Permutation>* out = nullptr;

  int neighbor_count(int v, const std::vector<int>& cell) const {
    int c = 0;
    for (int u : cell) c += (adj[v] >> u) & 1;
    return c;
  }

  // Splits cells by per-cell neighbor counts until the partition is
  // equitable. Subcells are ordered by their count signature, which is an
  // isomorphism-invariant rule, so two sides refined in lockstep stay
  // comparable. Returns one signature row per cell for pruning.
  std::vector<std::vector<int>> refine(Cells& cells) const {
    for (;;) {
      bool split = false;
      Cells next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(cells.size());
          for (const auto& other : cells) sig.push_back(neighbor_count(v, other));
          keyed.emplace_back(std::move(sig), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        size_t start = 0;
        for (size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<int> sub;
            for (size_t j = start; j < i; ++j) sub.push_back(keyed[j].second);
            std::sort(sub.begin(), sub.end());
            if (sub.size() != cell.size()) split = true;
            next.push_back(std::move(sub));
            start = i;
          }
        }
      }
      cells = std::move(next);
      if (!split) break;
    }
    std::vector<std::vector<int>> shape;
    shape.reserve(cells.size());
    for (const auto& cell : cells) {
      std::vector<int> row{static_cast<int>(cell.size())};
      for (const auto& other : cells) row.push_back(neighbor_count(cell[0], other));
      shape.push_back(std::move(row));
    }
    return shape;
  }

  bool leaf_is_automorphism(const Cells& sc, const Cells& tc) const {
    std::vector<int> img(n);
    for (size_t i = 0; i < sc.size(); ++i) img[sc[i][0]] = tc[i][0];
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (((adj[u] >> v) & 1) != ((adj[img[u]] >> img[v]) & 1)) return false;
    out->push_back(Permutation{std::move(img)});
    return true;
  }

  void search(Cells sigma, Cells tau) const {
    auto shape_s = refine(sigma);
    auto shape_t = refine(tau);
    if (shape_s != shape_t) return;

    int target = -1;
    size_t best = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
      if (sigma[i].size() > 1 && (target < 0 || sigma[i].size() < best)) {
        target = static_cast<int>(i);
        best = sigma[i].size();
      }
    if (target < 0) {
      if (leaf_is_automorphism(sigma, tau) &&
          static_cast<long>(out->size()) > cap)
        throw CapExceeded("automorphism group exceeds cap of " + std::to_string(cap), cap);
      return;
    }

    int v = sigma[target][0];
    Cells sigma2;
    sigma2.reserve(sigma.size() + 1);
    for (size_t i = 0; i < sigma.size(); ++i) {
      if (static_cast<int>(i) == target) {
        sigma2.push_back({v});
        std::vector<int> rest;
        for (int u : sigma[i])
          if (u != v) rest.push_back(u);
        sigma2.push_back(std::move(rest));
      } else {
        sigma2.push_back(sigma[i]);
      }
    }
    for (int u : tau[target]) {
      Cells tau2;
      tau2.reserve(tau.size() + 1);
      for (size_t i = 0; i < tau.size(); ++i) {
        if (static_cast<int>(i) == target) {
          tau2.push_back({u});
          std::vector<int> rest;
          for (int w : tau[i])
            if (w != u) rest.push_back(w);
          tau2.push_back(std::move(rest));
        } else {
          tau2.push_back(tau[i]);
        }
      }
      search(sigma2, tau2);
    }
  }
};

}  // namespace detail

// Enumerates the full automorphism group of a graph on at most 64 vertices.
// Throws TooLarge beyond that and CapExceeded once the group outgrows cap.
inline AutResult automorphism_group(const Graph& g, long cap = kDefaultClosureCap) {
  if (g.n > kMaxAutVertices)
    throw TooLarge("graph on " + std::to_string(g.n) +
                       " vertices exceeds the automorphism search limit " +
                       std::to_string(kMaxAutVertices),
                   g.n);
  if (g.n == 0) throw Error("automorphism group of an empty graph");
  AutResult res;
  res.hash = graph_hash(g);
  std::vector<Permutation> found;
  detail::AutSearch s;
  s.n = g.n;
  s.adj.assign(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) s.adj[u] |= 1ull << v;
  s.cap = cap;
  s.out = &found;
  std::vector<int> all(g.n);
  for (int i = 0; i < g.n; ++i) all[i] = i;
  s.search({all}, {all});

  res.elements.degree = g.n;
  res.elements.group_closed = true;
  res.elements.elements = std::move(found);
  res.order = res.elements.size();
  for (const auto& p : res.elements.elements)
    if (!is_automorphism(g, p))
      throw InternalVerificationFailed("automorphism search produced a non-automorphism");
  return res;
}

// A regular subgroup of the automorphism group, with its isomorphism type.
struct ClassifiedSubgroup {
  PermSet elements;  // sorted by image list
  GroupType type;
};

struct RegularSubgroupReport {
  std::vector<ClassifiedSubgroup> subgroups;  // sorted by type, then elements
  std::vector<std::pair<GroupType, long>> counts_by_type;
};

namespace detail {

struct RegularSearch {
  int n = 0;
  std::vector<std::vector<const Permutation*>> bucket;  // by image of vertex 0
  std::set<std::vector<std::vector<int>>>* seen = nullptr;
  std::vector<ClassifiedSubgroup>* out = nullptr;

  struct State {
    std::vector<Permutation> elems;
    std::unordered_set<std::vector<int>, ImageHash> members;
    std::uint64_t covered = 0;
  };

  // Adds p and keeps the running set viable: at most n elements, no two
  // sending vertex 0 to the same place. Returns false when the set can no
  // longer grow into a regular group.
  static bool add(State& st, const Permutation& p, int n) {
    if (st.members.count(p.images)) return true;
    if (static_cast<int>(st.elems.size()) == n) return false;
    std::uint64_t bit = 1ull << p.images[0];
    if (st.covered & bit) return false;
    st.covered |= bit;
    st.members.insert(p.images);
    st.elems.push_back(p);
    return true;
  }

  // Closes st under composition after appending p.
  static bool extend(State& st, const Permutation& p, int n) {
    size_t first_new = st.elems.size();
    if (!add(st, p, n)) return false;
    for (size_t i = first_new; i < st.elems.size(); ++i)
      for (size_t j = 0; j < st.elems.size(); ++j) {
        if (!add(st, compose(st.elems[i], st.elems[j]), n)) return false;
        if (!add(st, compose(st.elems[j], st.elems[i]), n)) return false;
      }
    return true;
  }

  void record(const State& st) const {
    std::vector<std::vector<int>> key;
    key.reserve(st.elems.size());
    for (const auto& p : st.elems) key.push_back(p.images);
    std::sort(key.begin(), key.end());
    if (!seen->insert(key).second) return;
    ClassifiedSubgroup sub;
    sub.elements.degree = n;
    sub.elements.group_closed = true;
    for (auto& images : key) sub.elements.elements.push_back(Permutation{images});
    sub.type = classify(multiplication_table(sub.elements));
    out->push_back(std::move(sub));
  }

  void search(const State& st) const {
    if (static_cast<int>(st.elems.size()) == n) {
      record(st);
      return;
    }
    int v = 0;
    while ((st.covered >> v) & 1) ++v;
    for (const Permutation* p : bucket[v]) {
      State next = st;
      if (extend(next, *p, n)) search(next);
    }
  }
};

}  // namespace detail

// Finds every regular subgroup of the automorphism group: subgroups acting
// transitively with exactly one element per vertex image. Search works by
// repeatedly picking the automorphism that sends vertex 0 to the lowest
// uncovered vertex; only automorphisms whose nontrivial powers are all
// fixed-point-free can lie in a regular group, which prunes the candidate
// lists up front.
inline RegularSubgroupReport enumerate_regular_subgroups(const Graph& g, const AutResult& aut) {
  RegularSubgroupReport rep;
  int n = g.n;
  if (n > kMaxAutVertices)
    throw TooLarge("graph too large for regular subgroup search", n);
  if (aut.order % n == 0) {
    detail::RegularSearch rs;
    rs.n = n;
    rs.bucket.resize(n);
    for (const auto& p : aut.elements.elements) {
      long ord = perm_order(p);
      if (n % ord != 0) continue;
      bool good = true;
      Permutation pw = p;
      for (long j = 1; j < ord && good; ++j) {
        good = is_fixed_point_free(pw);
        pw = compose(pw, p);
      }
      if (ord == 1 || good) rs.bucket[p.images[0]].push_back(&p);
    }
    std::set<std::vector<std::vector<int>>> seen;
    rs.seen = &seen;
    rs.out = &rep.subgroups;
    detail::RegularSearch::State st;
    st.elems.push_back(identity_perm(n));
    st.members.insert(st.elems[0].images);
    st.covered = 1;
    rs.search(st);
  }

  std::sort(rep.subgroups.begin(), rep.subgroups.end(),
            [](const ClassifiedSubgroup& a, const ClassifiedSubgroup& b) {
              if (a.type != b.type) return a.type < b.type;
              std::vector<std::vector<int>> ka, kb;
              for (const auto& p : a.elements.elements) ka.push_back(p.images);
              for (const auto& p : b.elements.elements) kb.push_back(p.images);
              return ka < kb;
            });
  for (const auto& sub : rep.subgroups) {
    if (!rep.counts_by_type.empty() && rep.counts_by_type.back().first == sub.type)
      ++rep.counts_by_type.back().second;
    else
      rep.counts_by_type.emplace_back(sub.type, 1);
  }
  return rep;
}

inline RegularSubgroupReport enumerate_regular_subgroups(const Graph& g,
                                                         long cap = kDefaultClosureCap) {
  return enumerate_regular_subgroups(g, automorphism_group(g, cap));
}

// Oracle-side check of a constructed action: right degree, every member an
// automorphism, and regular as a permutation group.
inline bool verify_action(const Graph& g, const RegularAction& act) {
  if (act.degree != g.n || !act.group.group_closed) return false;
  for (const auto& p : act.group.elements)
    if (!is_automorphism(g, p)) return false;
  return is_regular(act.group);
}

// Deterministic small generating set: greedily add elements that enlarge
// the generated subgroup, trying higher-order elements first so cyclic
// groups come out with a single generator.
inline std::vector<Permutation> greedy_generators(const PermSet& s) {
  detail::require_group(s, "greedy_generators");
  std::vector<const Permutation*> order(s.elements.size());
  for (size_t i = 0; i < s.elements.size(); ++i) order[i] = &s.elements[i];
  std::sort(order.begin(), order.end(), [](const Permutation* a, const Permutation* b) {
    long oa = perm_order(*a), ob = perm_order(*b);
    return oa != ob ? oa > ob : a->images < b->images;
  });
  std::vector<Permutation> gens;
  long have = 1;
  for (const Permutation* p : order) {
    if (have == s.size()) break;
    if (*p == identity_perm(s.degree)) continue;
    std::vector<Permutation> trial = gens;
    trial.push_back(*p);
    PermSet t{s.degree, trial, false};
    long sz = generate_closure(t).size();
    if (sz > have) {
      gens = std::move(trial);
      have = sz;
    }
  }
  if (gens.empty()) gens.push_back(identity_perm(s.degree));
  return gens;
}

// Plain-text report used by the command-line tools.
inline std::string render_regular_report(const AutResult& aut,
                                         const RegularSubgroupReport& rep) {
  std::ostringstream out;
  out << "AUT ORDER " << aut.order << '\n';
  out << "REGULAR SUBGROUPS " << rep.subgroups.size() << '\n';
  for (const auto& sub : rep.subgroups) {
    out << "TYPE " << sub.type.str() << '\n';
    for (const auto& p : greedy_generators(sub.elements)) out << "GEN " << to_string(p) << '\n';
  }
  return out.str();
}

}  // namespace cayrep
