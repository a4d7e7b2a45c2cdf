#include "alcove/classify.hpp"
#include "alcove/errors.hpp"
#include "alcove/rootsys.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace alcove;

TEST_SUITE("rootsys") {
  TEST_CASE("marks, comarks and root counts match the Bourbaki tables") {
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      CHECK(rs.marks() == oracle::marks(t));
      CHECK(rs.comarks() == oracle::comarks(t));
      CHECK(static_cast<long long>(rs.roots().size()) == oracle::root_count(t));
      CHECK(rs.highest_root() == rs.marks());
      CHECK(rs.weyl_order() == oracle::weyl_order(t));
    }
  }

  TEST_CASE("roots are permuted by simple reflections and pair to 2 with themselves") {
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      std::set<Root> all(rs.roots().begin(), rs.roots().end());
      for (const auto& a : rs.roots()) {
        CHECK(rs.pairing(a, a) == 2);
        for (int i = 0; i < rs.rank(); ++i) {
          Root simple(rs.rank(), 0);
          simple[i] = 1;
          long long k = rs.pairing(a, simple);
          Root b = a;
          b[i] -= k;
          CHECK(all.count(b) == 1);
        }
      }
    }
  }

  TEST_CASE("coroots and coweight coordinates") {
    RootSystem g2(SimpleType::parse("G2"));
    // a_j^vee in coweight coordinates is column j of the Cartan matrix.
    for (int j = 0; j < 2; ++j) {
      Root simple(2, 0);
      simple[j] = 1;
      IntVector col{g2.cartan()[0][j], g2.cartan()[1][j]};
      CHECK(g2.coroot(simple) == col);
    }
    CHECK(g2.in_coroot_lattice(RationalVector{Rational(2), Rational(-3)}));
    CHECK_FALSE(g2.in_coroot_lattice(RationalVector{Rational(1, 2), Rational(0)}));
    RootSystem a2(SimpleType::parse("A2"));
    CHECK_FALSE(a2.in_coroot_lattice(RationalVector{Rational(1), Rational(0)}));
    CHECK(a2.in_coroot_lattice(RationalVector{Rational(2), Rational(-1)}));
  }

  TEST_CASE("alcove vertices and membership") {
    RootSystem f4(SimpleType::parse("F4"));
    for (int i = 0; i <= 4; ++i) CHECK(f4.in_alcove(f4.alcove_vertex(i)));
    CHECK(f4.alcove_vertex(2) == RationalVector{Rational(0), Rational(1, 3), Rational(0), Rational(0)});
    CHECK_FALSE(f4.in_alcove(RationalVector{Rational(1), Rational(1), Rational(0), Rational(0)}));
  }

  TEST_CASE("type parsing and validation") {
    CHECK(SimpleType::parse("E8").rank == 8);
    CHECK(SimpleType::parse("a3").family == Family::A);
    for (const char* bad : {"", "A0", "A9", "E5", "F3", "G3", "H3", "X2", "A", "B1x"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(RootSystem(SimpleType::parse(bad)), InputError);
    }
  }

  TEST_CASE("Cartan classification recognizes every type and products") {
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      auto f = classify_cartan(cartan_matrix(t));
      REQUIRE(f.size() == 1);
      CHECK(f[0].rank == t.rank);
      CHECK(static_cast<long long>(RootSystem(f[0]).roots().size()) == oracle::root_count(t));
    }
    CHECK(classify_cartan({{2, 0}, {0, 2}}) == std::vector<SimpleType>{{Family::A, 1}, {Family::A, 1}});
    CHECK_THROWS_AS(classify_cartan({{2, -1}, {-2, 1}}), InputError);
    CHECK_THROWS_AS(classify_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), InputError);
  }
}
