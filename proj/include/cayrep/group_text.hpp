#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"

// Text forms.
//
// Group specs:   C8, C4xC2, dih(C4xC2)
// Elements:      (3,1)  or, in the reflecting coset,  x(3,1)
// Element lists: semicolon-separated elements, e.g. "(1,0);(8,0)"
//
// Whitespace is ignored everywhere. Residues are reduced into range, so
// (-1,5) over C4xC2 reads as (3,1). Errors carry 1-based line and column.

namespace cayrep {

namespace detail {

struct Cursor {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError(what + " at line 1, column " + std::to_string(pos + 1), 1,
                     static_cast<int>(pos + 1));
  }
  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + c + "' in " + what);
  }
  long integer(const char* what) {
    skip_ws();
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
      fail(std::string("expected an integer in ") + what);
    long v = 0;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000) {
        pos = start;
        fail(std::string("integer too large in ") + what);
      }
      ++pos;
    }
    return neg ? -v : v;
  }
};

inline std::vector<int> parse_factor_list(Cursor& c) {
  std::vector<int> orders;
  for (;;) {
    c.skip_ws();
    if (!c.eat('C')) c.fail("expected a cyclic factor 'C<n>'");
    size_t at = c.pos;
    long d = c.integer("cyclic factor order");
    if (d < 2) {
      c.pos = at;
      c.fail("cyclic factor order must be at least 2");
    }
    orders.push_back(static_cast<int>(d));
    if (!c.eat('x')) break;
  }
  return orders;
}

}  // namespace detail

inline GroupSpec parse_group_spec(std::string_view text) {
  detail::Cursor c{text};
  GroupSpec spec;
  c.skip_ws();
  if (text.substr(c.pos, 4) == "dih(") {
    c.pos += 4;
    spec.kind = GroupKind::GeneralizedDihedral;
    spec.orders = detail::parse_factor_list(c);
    c.expect(')', "dih(...)");
  } else {
    spec.kind = GroupKind::Abelian;
    spec.orders = detail::parse_factor_list(c);
  }
  if (!c.done()) c.fail("unexpected trailing text in group spec");
  long n = spec.order();
  if (n > kMaxTableOrder)
    throw TooLarge("group of order " + std::to_string(n) + " exceeds the supported limit " +
                       std::to_string(kMaxTableOrder),
                   n);
  return spec;
}

inline std::string to_string(const GroupSpec& spec) {
  std::string body;
  for (size_t i = 0; i < spec.orders.size(); ++i) {
    if (i) body += 'x';
    body += 'C';
    body += std::to_string(spec.orders[i]);
  }
  return spec.dihedral() ? "dih(" + body + ")" : body;
}

namespace detail {

inline Element parse_element_at(const GroupSpec& spec, Cursor& c) {
  Element e;
  e.residues.reserve(spec.orders.size());
  c.skip_ws();
  if (c.peek() == 'x') {
    if (!spec.dihedral()) c.fail("flip prefix 'x' is only valid for dih(...) groups");
    c.eat('x');
    e.flip = 1;
  }
  c.expect('(', "element literal");
  for (size_t i = 0; i < spec.orders.size(); ++i) {
    if (i) c.expect(',', "element literal");
    long r = c.integer("element residue");
    e.residues.push_back(mod(r, spec.orders[i]));
  }
  if (c.peek() == ',') c.fail("too many residues for this group");
  c.expect(')', "element literal");
  return e;
}

}  // namespace detail

inline Element parse_element(const GroupSpec& spec, std::string_view text) {
  detail::Cursor c{text};
  Element e = detail::parse_element_at(spec, c);
  if (!c.done()) c.fail("unexpected trailing text after element");
  return e;
}

// Semicolon-separated element list; empty or all-blank input means the
// empty list.
inline std::vector<Element> parse_element_list(const GroupSpec& spec, std::string_view text) {
  detail::Cursor c{text};
  std::vector<Element> out;
  if (c.done()) return out;
  for (;;) {
    out.push_back(detail::parse_element_at(spec, c));
    if (!c.eat(';')) break;
  }
  if (!c.done()) c.fail("unexpected trailing text after element list");
  return out;
}

inline std::string to_string(const GroupSpec& spec, const Element& e) {
  detail::check_element(spec, e);
  std::string s = e.flip ? "x(" : "(";
  for (size_t i = 0; i < e.residues.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.residues[i]);
  }
  s += ')';
  return s;
}

inline std::string to_string(const GroupSpec& spec, const std::vector<Element>& els) {
  std::string s;
  for (size_t i = 0; i < els.size(); ++i) {
    if (i) s += ';';
    s += to_string(spec, els[i]);
  }
  return s;
}

}  // namespace cayrep
