#include "alcove/errors.hpp"
#include "alcove/linalg.hpp"
#include "alcove/rational.hpp"

#include <doctest.h>

#include <limits>
#include <unordered_set>

using namespace alcove;

TEST_SUITE("rational") {
  TEST_CASE("normal form and printing") {
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(0, -5) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-7, 2).is_integer() == false);
    CHECK(Rational(-8, 2).is_integer());
  }

  TEST_CASE("parsing rejects decimals and empty coordinates") {
    CHECK(parse_rational_vector("0,1/3") == RationalVector{Rational(0), Rational(1, 3)});
    CHECK(parse_rational_vector(" -2/4 , 3") == RationalVector{Rational(-1, 2), Rational(3)});
    CHECK_THROWS_AS(parse_rational_vector("0.5,0"), InputError);
    CHECK_THROWS_AS(parse_rational_vector("1,,2"), InputError);
    CHECK_THROWS_AS(parse_rational_vector("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational_vector("x"), InputError);
  }

  TEST_CASE("overflowing intermediates spill to big integers exactly") {
    const long long big = std::numeric_limits<long long>::max() / 3;
    Rational a(big, 7), b(7, big);
    CHECK(a * b == Rational(1));
    Rational c = Rational(big) * Rational(big) * Rational(big);
    CHECK(c / Rational(big) / Rational(big) == Rational(big));
    CHECK((c - c) == Rational(0));
    CHECK(Rational(big) + Rational(big) > Rational(big));
  }

  TEST_CASE("equal values hash equally") {
    RationalVectorHash h;
    CHECK(h({Rational(2, 4), Rational(1)}) == h({Rational(1, 2), Rational(3, 3)}));
    std::unordered_set<RationalVector, RationalVectorHash> s{{Rational(1, 2)}, {Rational(2, 4)}};
    CHECK(s.size() == 1);
  }

  TEST_CASE("exact linear algebra") {
    RationalMatrix m{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
    auto inv = inverse(m);
    REQUIRE(inv);
    CHECK((*inv)[0][0] == Rational(2, 3));
    CHECK(determinant(m) == Rational(3));
    CHECK(rank(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(nullspace(RationalMatrix{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}).size() == 1);
    CHECK_FALSE(inverse(RationalMatrix{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}}));
  }
}
