#include "alcove/rational.hpp"

#include "alcove/errors.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace alcove {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd_wide(u128 a, u128 b) {
  if (a <= std::numeric_limits<std::uint64_t>::max() &&
      b <= std::numeric_limits<std::uint64_t>::max()) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Integer wide_to_integer(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  Integer r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Integer(-r) : r;
}

bool integer_fits(const Integer& v) { return v <= kMax && v >= -kMax; }

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == std::numeric_limits<long long>::min()) *this = from_wide(n, 1);
}

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(n, d);
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = from_big(Big(n, d));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<Big>(*other.big_) : nullptr;
  }
  return *this;
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd_wide(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_unique<Big>(wide_to_integer(n), wide_to_integer(d));
  }
  return r;
}

Rational Rational::from_big(const Big& value) {
  Integer n = boost::multiprecision::numerator(value);
  Integer d = boost::multiprecision::denominator(value);
  Rational r;
  if (integer_fits(n) && integer_fits(d)) {
    r.num_ = n.convert_to<std::int64_t>();
    r.den_ = d.convert_to<std::int64_t>();
  } else {
    r.big_ = std::make_unique<Big>(value);
  }
  return r;
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big(Integer(num_), Integer(den_));
}

Integer Rational::numerator() const {
  return big_ ? Integer(boost::multiprecision::numerator(*big_)) : Integer(num_);
}

Integer Rational::denominator() const {
  return big_ ? Integer(boost::multiprecision::denominator(*big_)) : Integer(den_);
}

bool Rational::is_integer() const { return big_ ? denominator() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

Integer Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return Integer(q);
  }
  Integer n = numerator();
  Integer d = denominator();
  Integer q = n / d;
  if (q * d != n && n < 0) --q;
  return q;
}

Rational Rational::frac() const {
  if (!big_) {
    std::int64_t r = num_ % den_;
    if (r < 0) r += den_;
    Rational out;
    out.num_ = r;
    out.den_ = den_;
    return out;
  }
  return *this - Rational(floor());
}

std::string Rational::to_string() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  Integer d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) -> Integer {
    std::string_view digits = part;
    bool neg = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      neg = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw InputError("malformed rational '" + std::string(text) + "'");
    for (char ch : digits) {
      if (ch < '0' || ch > '9') {
        throw InputError("malformed rational '" + std::string(text) +
                         "' (expected n or n/d with integer n, d)");
      }
    }
    Integer v{std::string(digits)};
    return neg ? Integer(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("malformed rational '" + std::string(text) + "' (signed denominator)");
  }
  Integer n = parse_int(text.substr(0, slash));
  Integer d = parse_int(den_text);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(to_string());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big(-*big_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(i128(a.num_) + b.num_, 1);
    std::int64_t g = std::gcd(a.den_, b.den_);
    i128 bd = b.den_ / g;
    i128 n = i128(a.num_) * bd + i128(b.num_) * (a.den_ / g);
    return Rational::from_wide(n, i128(a.den_) * bd);
  }
  return Rational::from_big(a.to_big() + b.to_big());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    i128 n = i128(a.num_ / g1) * (b.num_ / g2);
    i128 d = i128(a.den_ / g2) * (b.den_ / g1);
    if (fits(n) && fits(d)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    return Rational::from_wide(n, d);
  }
  return Rational::from_big(a.to_big() * b.to_big());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  if (!b.big_) {
    Rational inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Rational::from_big(a.to_big() / b.to_big());
}

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  auto x = a.to_big();
  auto y = b.to_big();
  if (x < y) return std::strong_ordering::less;
  if (y < x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw InputError("empty coordinate in point '" + std::string(text) + "'");
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

std::size_t RationalVectorHash::operator()(const RationalVector& v) const {
  std::size_t h = v.size();
  for (const auto& x : v) h ^= x.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace alcove
