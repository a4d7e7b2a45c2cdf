#include "alcove/rootsys.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace alcove {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

std::string SimpleType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

SimpleType SimpleType::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return InputError("invalid type '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2) throw fail("expected a family letter A-G followed by a rank");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G') throw fail("family must be one of A-G");
  std::string_view digits = text.substr(1);
  if (digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw fail("rank must be a small positive integer");
  }
  SimpleType t{static_cast<Family>(letter - 'A'), std::stoi(std::string(digits))};
  validate(t);
  return t;
}

bool is_valid(const SimpleType& t) {
  if (t.rank < 1 || t.rank > kMaxRank) return false;
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

void validate(const SimpleType& t) {
  if (is_valid(t)) return;
  std::string why;
  switch (t.family) {
    case Family::A: why = "A needs rank >= 1"; break;
    case Family::B: why = "B needs rank >= 2"; break;
    case Family::C: why = "C needs rank >= 2"; break;
    case Family::D: why = "D needs rank >= 3"; break;
    case Family::E: why = "E needs rank 6, 7 or 8"; break;
    case Family::F: why = "F exists only in rank 4"; break;
    case Family::G: why = "G exists only in rank 2"; break;
  }
  if (t.rank > kMaxRank) why = "rank is capped at " + std::to_string(kMaxRank);
  throw InputError("invalid-rank: " + t.name() + " (" + why + ")");
}

std::vector<SimpleType> all_types(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (is_valid({f, r})) out.push_back({f, r});
  return out;
}

Integer weyl_group_order(const SimpleType& t) {
  validate(t);
  auto factorial = [](int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (Integer(1) << n) * factorial(n);
    case Family::D: return (Integer(1) << (n - 1)) * factorial(n);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

IntMatrix cartan_matrix(const SimpleType& t) {
  validate(t);
  int n = t.rank;
  IntMatrix c = identity_matrix(n);
  for (auto& row : c)
    for (auto& x : row) x *= 2;
  auto bond = [&](int i, int j) {  // 1-based simply laced bond
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;  // a_n is short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;  // a_n is long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      c[1][2] = -2;  // a_3, a_4 short
      break;
    case Family::G:
      c[0][1] = -1;  // a_1 short
      c[1][0] = -3;
      break;
  }
  return c;
}

RootSystem::RootSystem(SimpleType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = type_.rank;

  // Symmetrize: C[i][j] l_j = C[j][i] l_i along the (tree) Dynkin diagram.
  std::vector<Rational> len(n);
  std::vector<bool> seen(n, false);
  len[0] = Rational(1);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (seen[j] || cartan_[i][j] == 0) continue;
      len[j] = len[i] * Rational(cartan_[j][i], cartan_[i][j]);
      seen[j] = true;
      queue.push_back(j);
    }
  }
  Rational shortest = *std::min_element(len.begin(), len.end());
  lengths_.resize(n);
  for (int i = 0; i < n; ++i) {
    Rational l = len[i] / shortest;
    lengths_[i] = l.numerator().convert_to<long long>();
  }
  gram2_.assign(n, IntVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram2_[i][j] = cartan_[i][j] * lengths_[j];

  // Reflection closure of the simple roots.
  std::set<Root> found;
  std::deque<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    found.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Root a = frontier.front();
    frontier.pop_front();
    for (int i = 0; i < n; ++i) {
      long long k = 0;
      for (int m = 0; m < n; ++m) k += a[m] * cartan_[m][i];
      if (k == 0) continue;
      Root b = a;
      b[i] -= k;
      if (found.insert(b).second) frontier.push_back(b);
    }
  }
  for (const auto& r : found)
    if (std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; })) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = positive_;
  for (const auto& r : positive_) {
    Root neg = r;
    for (auto& x : neg) x = -x;
    roots_.push_back(neg);
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], i);

  marks_ = highest_root();
  comarks_ = coroot_in_coroot_basis(highest_root());

  cartan_inverse_ = *inverse(to_rational(cartan_));
}

std::optional<std::size_t> RootSystem::root_index(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long long RootSystem::inner2(const Root& a, const Root& b) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * gram2_[i][j] * b[j];
  }
  return s;
}

long long RootSystem::squared_length(const Root& r) const { return inner2(r, r) / 2; }

long long RootSystem::pairing(const Root& a, const Root& b) const { return 2 * inner2(a, b) / inner2(b, b); }

IntVector RootSystem::coroot(const Root& a) const {
  long long norm2 = inner2(a, a);
  IntVector out(rank());
  for (int i = 0; i < rank(); ++i) {
    long long s = 0;
    for (int j = 0; j < rank(); ++j) s += gram2_[i][j] * a[j];
    out[i] = 2 * s / norm2;
  }
  return out;
}

IntVector RootSystem::coroot_in_coroot_basis(const Root& a) const {
  long long la = squared_length(a);
  IntVector out(rank());
  for (int k = 0; k < rank(); ++k) out[k] = a[k] * lengths_[k] / la;
  return out;
}

RationalVector RootSystem::to_coroot_basis(const RationalVector& c) const { return multiply(cartan_inverse_, c); }

RationalVector RootSystem::from_coroot_basis(const RationalVector& u) const { return multiply(cartan_, u); }

bool RootSystem::in_coroot_lattice(const RationalVector& c) const { return is_integral(to_coroot_basis(c)); }

RationalVector RootSystem::canonical_mod_coroot(const RationalVector& c) const {
  RationalVector u = to_coroot_basis(c);
  for (auto& x : u) x = x.frac();
  return from_coroot_basis(u);
}

bool RootSystem::in_alcove(const RationalVector& c) const {
  if (static_cast<int>(c.size()) != rank()) return false;
  for (const auto& x : c)
    if (x.sign() < 0) return false;
  return evaluate(highest_root(), c) <= Rational(1);
}

RationalVector RootSystem::alcove_vertex(int node) const {
  if (node < 0 || node > rank()) throw InputError("alcove vertex: node out of range");
  RationalVector v(rank());
  if (node > 0) v[node - 1] = Rational(1, marks_[node - 1]);
  return v;
}

RootSystem build(SimpleType type) { return RootSystem(type); }

RationalVector coroot_in_coweight_basis(const RootSystem& rs, int j) {
  if (j < 1 || j > rs.rank()) {
    throw InputError("node index " + std::to_string(j) + " out of range 1.." + std::to_string(rs.rank()));
  }
  RationalVector v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) v[i] = Rational(rs.cartan()[i][j - 1]);
  return v;
}

}  // namespace alcove
