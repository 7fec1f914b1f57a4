#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "cayrep/perm.hpp"

using namespace cayrep;

namespace {

PermSet gens_of(int degree, std::vector<Permutation> ps) {
  return PermSet{degree, std::move(ps), false};
}

}  // namespace

TEST_CASE("composition applies the right factor first", "[perm]") {
  Permutation p{{1, 2, 0}};
  Permutation q{{0, 2, 1}};
  REQUIRE(compose(p, q) == Permutation{{1, 0, 2}});
  REQUIRE(compose(q, p) == Permutation{{2, 1, 0}});
  REQUIRE(compose(p, invert(p)) == identity_perm(3));
  REQUIRE(compose(invert(p), p) == identity_perm(3));
  REQUIRE_THROWS_AS(compose(p, identity_perm(4)), DegreeMismatch);
}

TEST_CASE("permutation order and fixed points", "[perm]") {
  REQUIRE(perm_order(identity_perm(5)) == 1);
  REQUIRE(perm_order(Permutation{{1, 2, 3, 4, 5, 0}}) == 6);
  REQUIRE(perm_order(Permutation{{1, 0, 3, 4, 2}}) == 6);
  REQUIRE(is_fixed_point_free(Permutation{{1, 0, 3, 2}}));
  REQUIRE_FALSE(is_fixed_point_free(Permutation{{0, 2, 1}}));
}

TEST_CASE("permutation text form", "[perm]") {
  REQUIRE(to_string(Permutation{{1, 2, 0}}) == "[1,2,0]");
  REQUIRE(to_string(identity_perm(1)) == "[0]");
}

TEST_CASE("closure of a single n-cycle", "[perm]") {
  PermSet c = generate_closure(gens_of(6, {Permutation{{1, 2, 3, 4, 5, 0}}}));
  REQUIRE(c.size() == 6);
  REQUIRE(c.group_closed);
  REQUIRE(c.elements[0] == identity_perm(6));
  REQUIRE(is_transitive(c));
  REQUIRE(is_regular(c));
}

TEST_CASE("closure order is deterministic breadth first", "[perm]") {
  // two transpositions generating the symmetric group on 3 points
  Permutation a{{1, 0, 2}};
  Permutation b{{0, 2, 1}};
  PermSet s = generate_closure(gens_of(3, {a, b}));
  REQUIRE(s.size() == 6);
  REQUIRE(s.elements[0] == identity_perm(3));
  REQUIRE(s.elements[1] == a);
  REQUIRE(s.elements[2] == b);
  // same generators, same order, every time
  PermSet again = generate_closure(gens_of(3, {a, b}));
  REQUIRE(s.elements == again.elements);

  REQUIRE(is_transitive(s));
  REQUIRE_FALSE(is_regular(s));  // six elements on three points
}

TEST_CASE("closure respects its cap", "[perm]") {
  Permutation a{{1, 0, 2, 3, 4}};
  Permutation b{{0, 1, 2, 4, 3}};
  Permutation c{{1, 2, 3, 4, 0}};
  // these generate the full symmetric group on 5 points, order 120
  REQUIRE(generate_closure(gens_of(5, {a, b, c})).size() == 120);
  REQUIRE_THROWS_AS(generate_closure(gens_of(5, {a, b, c}), 100), CapExceeded);
  try {
    generate_closure(gens_of(5, {a, b, c}), 100);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    REQUIRE(e.cap == 100);
  }
}

TEST_CASE("closure input validation", "[perm]") {
  REQUIRE_THROWS_AS(generate_closure(gens_of(3, {})), Error);
  REQUIRE_THROWS_AS(generate_closure(gens_of(4, {identity_perm(3)})), DegreeMismatch);
  REQUIRE_THROWS_AS(generate_closure(gens_of(3, {Permutation{{0, 0, 1}}})), Error);
}

TEST_CASE("group predicates reject unmarked sets", "[perm]") {
  PermSet raw = gens_of(3, {identity_perm(3)});
  REQUIRE_THROWS_AS(is_transitive(raw), Error);
  REQUIRE_THROWS_AS(is_regular(raw), Error);
  REQUIRE_THROWS_AS(multiplication_table(raw), Error);
}

TEST_CASE("intransitive closure is detected", "[perm]") {
  // swaps inside {0,1} and inside {2,3} never mix the blocks
  PermSet s = generate_closure(gens_of(4, {Permutation{{1, 0, 2, 3}}, Permutation{{0, 1, 3, 2}}}));
  REQUIRE(s.size() == 4);
  REQUIRE_FALSE(is_transitive(s));
  REQUIRE_FALSE(is_regular(s));
}

TEST_CASE("transitive but not regular versus sharply transitive", "[perm]") {
  // the full symmetric group on 3 points is transitive with 6 elements
  PermSet s3 = generate_closure(gens_of(3, {Permutation{{1, 0, 2}}, Permutation{{1, 2, 0}}}));
  REQUIRE(is_transitive(s3));
  REQUIRE_FALSE(is_regular(s3));

  // a regular group is sharply transitive: exactly one element per image of 0
  PermSet c4 = generate_closure(gens_of(4, {Permutation{{1, 2, 3, 0}}}));
  REQUIRE(is_regular(c4));
  std::vector<int> hits(4, 0);
  for (const auto& p : c4.elements) ++hits[p.images[0]];
  REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
}

TEST_CASE("multiplication table of a closure is a group table", "[perm]") {
  PermSet v4 = generate_closure(gens_of(4, {Permutation{{1, 0, 3, 2}}, Permutation{{2, 3, 0, 1}}}));
  REQUIRE(v4.size() == 4);
  MulTable t = multiplication_table(v4);
  REQUIRE_NOTHROW(check_group_table(t));
  REQUIRE(classify(t) == GroupType::abelian({2, 2}));

  PermSet s3 = generate_closure(gens_of(3, {Permutation{{1, 0, 2}}, Permutation{{1, 2, 0}}}));
  REQUIRE(classify(multiplication_table(s3)) == GroupType::dihedral_over({3}));
}
