#include "alcove/errors.hpp"
#include "alcove/weyl.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace alcove;

namespace {

RationalVector random_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long long> den(1, 12);
  long long d = den(rng);
  std::uniform_int_distribution<long long> num(-4 * d, 4 * d);
  RationalVector p(n);
  for (auto& x : p) x = Rational(num(rng), d);
  return p;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("enumerated Weyl groups have the closed-form order") {
    for (const auto& t : all_types(4)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      const auto& w = weyl_group(rs);
      CHECK(static_cast<long long>(w.size()) == oracle::weyl_order(t));
      std::set<IntMatrix> distinct;
      for (const auto& e : w) distinct.insert(e.matrix());
      CHECK(distinct.size() == w.size());
    }
    CHECK_THROWS_AS(weyl_group(RootSystem(SimpleType::parse("E8"))), ResourceError);
  }

  TEST_CASE("group law: involutions, composition, inverses") {
    std::mt19937 rng(5);
    for (const auto& t : all_types(4)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      for (int i = 0; i <= rs.rank(); ++i) {
        WeylElement s = WeylElement::simple_reflection(rs, i);
        CHECK(s * s == WeylElement::identity(rs.rank()));
      }
      for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> node(0, rs.rank());
        WeylElement a = WeylElement::simple_reflection(rs, node(rng)) * WeylElement::simple_reflection(rs, node(rng));
        WeylElement b = WeylElement::simple_reflection(rs, node(rng));
        RationalVector x = random_point(rng, rs.rank());
        CHECK((a * b).apply(rs, x) == a.apply(rs, b.apply(rs, x)));
        CHECK(a.inverse().apply(rs, a.apply(rs, x)) == x);
      }
    }
  }

  TEST_CASE("affine reflection s_0 fixes the wall d = 1") {
    RootSystem b3(SimpleType::parse("B3"));
    WeylElement s0 = WeylElement::simple_reflection(b3, 0);
    for (int i = 1; i <= 3; ++i) {
      RationalVector v = b3.alcove_vertex(i);
      CHECK(s0.apply(b3, v) == v);
    }
    CHECK(s0.apply(b3, b3.alcove_vertex(0)) != b3.alcove_vertex(0));
  }

  TEST_CASE("reduction to the alcove") {
    RootSystem a2(SimpleType::parse("A2"));
    auto [p, w] = reduce_to_alcove(a2, RationalVector{Rational(-1, 3), Rational(0)});
    CHECK(p == RationalVector{Rational(0), Rational(1, 3)});
    CHECK(w.apply(a2, RationalVector{Rational(-1, 3), Rational(0)}) == p);
    std::mt19937 rng(9);
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      for (int trial = 0; trial < 40; ++trial) {
        RationalVector x = random_point(rng, rs.rank());
        auto [r, u] = reduce_to_alcove(rs, x);
        CHECK(rs.in_alcove(r));
        CHECK(u.apply(rs, x) == r);
        CHECK(congruent_mod_coroot(rs, u.linear_part().apply(rs, x), r));
      }
    }
  }

  TEST_CASE("orbit and stabilizer of special points") {
    RootSystem a2(SimpleType::parse("A2"));
    CHECK(orbit(a2, RationalVector{Rational(0), Rational(0)}).size() == 1);
    CHECK(stabilizer(a2, {RationalVector{Rational(0), Rational(0)}}).size() == 6);
    // The fundamental coweight is central mod Q^vee.
    CHECK(orbit(a2, RationalVector{Rational(1), Rational(0)}).size() == 1);
    // Φ(barycenter) is empty, so its stabilizer in W is trivial.
    CHECK(orbit(a2, RationalVector{Rational(1, 3), Rational(1, 3)}).size() == 6);
  }

  TEST_CASE("dimension checks") {
    RootSystem a2(SimpleType::parse("A2"));
    CHECK_THROWS_AS(reduce_point(a2, RationalVector{Rational(1)}), InputError);
  }
}
