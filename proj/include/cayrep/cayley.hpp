#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "group_text.hpp"
#include "perm.hpp"

namespace cayrep {

// A validated connection set: identity-free, inverse-closed, duplicates
// dropped. Elements keep their first-appearance order.
struct ConnectionSet {
  GroupSpec spec;
  std::vector<Element> elements;
};

inline ConnectionSet validate_connection_set(const GroupSpec& spec,
                                             const std::vector<Element>& raw) {
  ConnectionSet s{spec, {}};
  for (const auto& e : raw) {
    detail::check_element(spec, e);
    if (is_identity(e))
      throw IdentityInSet("connection set contains the identity " + to_string(spec, e));
    if (std::find(s.elements.begin(), s.elements.end(), e) == s.elements.end())
      s.elements.push_back(e);
  }
  std::string missing;
  for (const auto& e : s.elements) {
    Element inv = invert(spec, e);
    if (std::find(s.elements.begin(), s.elements.end(), inv) == s.elements.end()) {
      if (!missing.empty()) missing += ", ";
      missing += to_string(spec, e) + " without " + to_string(spec, inv);
    }
  }
  if (!missing.empty())
    throw NotInverseClosed("connection set is not inverse-closed: " + missing);
  return s;
}

// Undirected simple graph. Adjacency lists are sorted ascending. labels, if
// nonempty, has one entry per vertex (possibly the empty string).
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> labels;

  long edge_count() const {
    long m = 0;
    for (const auto& a : adj) m += static_cast<long>(a.size());
    return m / 2;
  }
  bool has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }
};

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

// Cayley graph of the set's group: vertices are the group elements in
// enumeration order, and u is adjacent to s*u for every connection element
// s. Inverse closure makes this symmetric, and excluding the identity rules
// out loops. Vertices are labeled with their element literals.
inline Graph build_cayley_graph(const ConnectionSet& s) {
  const GroupSpec& spec = s.spec;
  long n = spec.order();
  Graph g;
  g.n = static_cast<int>(n);
  g.adj.resize(n);
  g.labels.resize(n);
  std::vector<Element> els = enumerate_elements(spec);
  for (long u = 0; u < n; ++u) {
    g.labels[u] = to_string(spec, els[u]);
    for (const auto& e : s.elements)
      g.adj[u].push_back(element_index(spec, multiply(spec, e, els[u])));
    std::sort(g.adj[u].begin(), g.adj[u].end());
  }
  return g;
}

// The right translations z -> z*h, one per group element h, acting on
// element indices. They form a group; for a Cayley graph built with
// left-acting connection elements they are automorphisms.
inline PermSet right_translations(const GroupSpec& spec) {
  long n = spec.order();
  if (n > kDefaultClosureCap)
    throw TooLarge("group too large for explicit translations", n);
  std::vector<Element> els = enumerate_elements(spec);
  PermSet out;
  out.degree = static_cast<int>(n);
  out.group_closed = true;
  out.elements.reserve(n);
  for (long h = 0; h < n; ++h) {
    Permutation p;
    p.images.resize(n);
    for (long z = 0; z < n; ++z)
      p.images[z] = element_index(spec, multiply(spec, els[z], els[h]));
    out.elements.push_back(std::move(p));
  }
  return out;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.n) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (!g.has_edge(p.images[u], p.images[v])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Graph file format.
//
//   n m
//   u v        (one line per edge, u < v, ascending lexicographic)
//   # label i (element)   (optional trailing label lines)
//
// Vertices are 0-indexed; every line ends with a newline. Writing is
// canonical, so writing a parsed file reproduces it byte for byte.
// ---------------------------------------------------------------------------

inline std::string write_graph(const Graph& g) {
  std::ostringstream out;
  auto edges = edge_list(g);
  out << g.n << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  if (!g.labels.empty())
    for (int i = 0; i < g.n; ++i)
      if (!g.labels[i].empty()) out << "# label " << i << ' ' << g.labels[i] << '\n';
  return out.str();
}

inline Graph parse_graph(std::string_view text) {
  Graph g;
  long m = -1;
  long edges_seen = 0;
  int lineno = 0;
  size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw UsageError("graph file, line " + std::to_string(lineno) + ": " + what, lineno, 1);
  };
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream in(line);
      std::string hash, word;
      long v = -1;
      in >> hash >> word >> v;
      if (word == "label" && in && v >= 0) {
        std::string label;
        std::getline(in >> std::ws, label);
        if (g.labels.empty() && m >= 0) g.labels.resize(g.n);
        if (m < 0 || v >= g.n) fail("label for unknown vertex");
        g.labels[v] = label;
      }
      continue;
    }
    std::istringstream in(line);
    long a, b;
    if (!(in >> a >> b)) fail("expected two integers");
    std::string rest;
    if (in >> rest) fail("unexpected trailing text");
    if (m < 0) {
      if (a < 1 || a > 100000 || b < 0) fail("bad header");
      g.n = static_cast<int>(a);
      m = b;
      g.adj.resize(g.n);
    } else {
      if (a < 0 || b < 0 || a >= g.n || b >= g.n) fail("vertex out of range");
      if (a >= b) fail("edge must list the smaller vertex first");
      if (++edges_seen > m) fail("more edges than the header declares");
      const auto& row = g.adj[a];
      if (std::find(row.begin(), row.end(), static_cast<int>(b)) != row.end())
        fail("duplicate edge");
      g.adj[a].push_back(static_cast<int>(b));
      g.adj[b].push_back(static_cast<int>(a));
    }
  }
  if (m < 0) throw UsageError("graph file is empty", 1, 1);
  if (edges_seen != m)
    throw UsageError("graph file declares " + std::to_string(m) + " edges but has " +
                         std::to_string(edges_seen),
                     lineno, 1);
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

}  // namespace cayrep
