#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline and combined through 128-bit intermediates; anything larger spills to
// an arbitrary-precision cpp_rational. Results are demoted back to the inline
// form whenever they fit, so equal values always share one representation.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  explicit Rational(const Integer& n, const Integer& d = 1);

  Rational(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  Integer numerator() const;
  Integer denominator() const;

  bool is_integer() const;
  bool is_zero() const { return !big_ && num_ == 0; }
  int sign() const;

  Integer floor() const;
  // x - floor(x), always in [0, 1).
  Rational frac() const;

  std::string to_string() const;
  // Accepts "n" or "n/d" with an optional leading sign; no decimals.
  static Rational parse(std::string_view text);

  std::size_t hash() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  using Big = boost::multiprecision::cpp_rational;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<Big> big_;

  static Rational from_big(const Big& value);
  static Rational from_wide(__int128 n, __int128 d);
  Big to_big() const;
};

// Exact point of h written in the fundamental-coweight basis: coordinate i is
// a_i(t). Alcove points, torus elements and Weyl images all use this form.
using RationalVector = std::vector<Rational>;

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);

std::string to_string(const RationalVector& v);
// Comma separated list of rationals, e.g. "1/3,0,-2/5".
RationalVector parse_rational_vector(std::string_view text);
bool is_integral(const RationalVector& v);

struct RationalVectorHash {
  std::size_t operator()(const RationalVector& v) const;
};

}  // namespace alcove
