#include "alcove/intlat.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace alcove {

namespace {

BigMatrix big_identity(std::size_t n) {
  BigMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

long long to_ll(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min()) {
    throw ResourceError("integer overflow converting lattice data");
  }
  return x.convert_to<long long>();
}

IntVector to_int_vector(const RationalVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_ll(v[i].numerator());
  return out;
}

RationalVector to_rational_vector(const IntVector& v) { return RationalVector(v.begin(), v.end()); }

// Prime-power decomposition {p: [e_1, e_2, ...]} of a list of cyclic orders.
std::map<long long, std::vector<int>> primary_parts(const std::vector<long long>& orders) {
  std::map<long long, std::vector<int>> parts;
  for (long long n : orders) {
    for (long long p = 2; p * p <= n; ++p) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      if (e) parts[p].push_back(e);
    }
    if (n > 1) parts[n].push_back(1);
  }
  for (auto& [p, es] : parts) std::sort(es.rbegin(), es.rend());
  return parts;
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  std::size_t k = D.empty() ? 0 : std::min(D.size(), D[0].size());
  for (std::size_t i = 0; i < k; ++i) d.push_back(D[i][i]);
  return d;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out;
  for (const auto& row : m) out.emplace_back(row.begin(), row.end());
  return out;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  BigMatrix out(n, std::vector<Integer>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

SmithForm smith_normal_form(const BigMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  SmithForm s{big_identity(rows), m, big_identity(cols)};
  auto& a = s.D;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : s.V) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t target, std::size_t source, const Integer& f) {  // row_t += f row_s
    for (std::size_t j = 0; j < cols; ++j) a[target][j] += f * a[source][j];
    for (std::size_t j = 0; j < rows; ++j) s.U[target][j] += f * s.U[source][j];
  };
  auto add_col = [&](std::size_t target, std::size_t source, const Integer& f) {
    for (std::size_t i = 0; i < rows; ++i) a[i][target] += f * a[i][source];
    for (std::size_t i = 0; i < cols; ++i) s.V[i][target] += f * s.V[i][source];
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == rows) return s;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce the divisibility chain.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, 1);
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
  }
  return s;
}

SmithForm smith_normal_form(const IntMatrix& m) { return smith_normal_form(to_big(m)); }

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<long long>& orders) {
  for (long long n : orders)
    if (n <= 0) throw InputError("cyclic order must be positive");
  auto parts = primary_parts(orders);
  std::size_t len = 0;
  for (const auto& [p, es] : parts) len = std::max(len, es.size());
  // Largest invariant factor collects the largest prime powers, and so on.
  std::vector<long long> factors(len, 1);
  for (const auto& [p, es] : parts)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (int e = 0; e < es[i]; ++e) factors[i] *= p;
  std::reverse(factors.begin(), factors.end());
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  return g;
}

long long FiniteAbelianGroup::order() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1LL, std::multiplies<>());
}

bool FiniteAbelianGroup::embeds_in(const FiniteAbelianGroup& other) const {
  auto mine = primary_parts(factors_);
  auto theirs = primary_parts(other.factors_);
  for (const auto& [p, es] : mine) {
    auto it = theirs.find(p);
    if (it == theirs.end() || it->second.size() < es.size()) return false;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (es[i] > it->second[i]) return false;
  }
  return true;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(factors_[i]);
  }
  return out;
}

IntegerLattice::IntegerLattice(IntMatrix basis, std::size_t ambient_dim) : basis_(std::move(basis)), dim_(ambient_dim) {
  for (const auto& row : basis_)
    if (row.size() != dim_) throw InputError("lattice basis row has wrong dimension");
  if (!basis_.empty() && alcove::rank(to_rational(basis_)) != basis_.size()) {
    throw InputError("lattice basis rows are linearly dependent");
  }
}

IntegerLattice IntegerLattice::from_generators(const IntMatrix& generators, std::size_t ambient_dim) {
  if (generators.empty()) return IntegerLattice({}, ambient_dim);
  SmithForm s = smith_normal_form(generators);
  BigMatrix ug = multiply(s.U, to_big(generators));
  IntMatrix basis;
  for (std::size_t i = 0; i < ug.size(); ++i) {
    if (std::all_of(ug[i].begin(), ug[i].end(), [](const Integer& x) { return x == 0; })) continue;
    IntVector row;
    for (const auto& x : ug[i]) row.push_back(to_ll(x));
    basis.push_back(std::move(row));
  }
  return IntegerLattice(std::move(basis), ambient_dim);
}

IntegerLattice IntegerLattice::standard(std::size_t n) { return IntegerLattice(identity_matrix(n), n); }

std::optional<RationalVector> IntegerLattice::span_coordinates(const RationalVector& v) const {
  if (v.size() != dim_) throw InputError("vector has wrong dimension for lattice");
  if (basis_.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return RationalVector{};
  }
  return solve(to_rational(transpose(basis_)), v);
}

std::optional<IntVector> IntegerLattice::coordinates(const IntVector& v) const {
  auto x = span_coordinates(to_rational_vector(v));
  if (!x || !is_integral(*x)) return std::nullopt;
  return to_int_vector(*x);
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.dim_ != dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const IntVector& v) { return contains(v); });
}

IntegerLattice IntegerLattice::intersect_span(const IntMatrix& directions) const {
  if (basis_.empty()) return *this;
  // Normals n with directions . n = 0 cut out the span; keep x with (x B) N = 0.
  RationalMatrix normals = directions.empty() ? to_rational(identity_matrix(dim_)) : nullspace(to_rational(directions));
  if (normals.empty()) return *this;
  IntMatrix bn(basis_.size(), IntVector(normals.size()));
  for (std::size_t k = 0; k < normals.size(); ++k) {
    Integer lcm = 1;
    for (const auto& x : normals[k]) lcm = boost::multiprecision::lcm(lcm, x.denominator());
    IntVector n(dim_);
    for (std::size_t j = 0; j < dim_; ++j) n[j] = to_ll((normals[k][j] * Rational(lcm)).numerator());
    for (std::size_t i = 0; i < basis_.size(); ++i) bn[i][k] = dot(basis_[i], n);
  }
  // Integer left kernel of bn: columns of V beyond the rank in the SNF of bn^T.
  SmithForm s = smith_normal_form(transpose(bn));
  auto diag = s.diagonal();
  std::size_t r = 0;
  while (r < diag.size() && diag[r] != 0) ++r;
  IntMatrix out;
  for (std::size_t j = r; j < basis_.size(); ++j) {
    IntVector row(dim_, 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      long long c = to_ll(s.V[i][j]);
      if (c == 0) continue;
      for (std::size_t t = 0; t < dim_; ++t) row[t] += c * basis_[i][t];
    }
    out.push_back(std::move(row));
  }
  return IntegerLattice(std::move(out), dim_);
}

FiniteAbelianGroup saturation_quotient(const IntegerLattice& ambient, const IntegerLattice& sub) {
  if (sub.ambient_dim() != ambient.ambient_dim()) throw InputError("saturation_quotient: dimension mismatch");
  if (sub.rank() == 0) return {};
  IntMatrix coords;
  for (const auto& v : sub.basis()) {
    auto c = ambient.coordinates(v);
    if (!c) throw InputError("saturation_quotient: sublattice is not contained in the ambient lattice");
    coords.push_back(*c);
  }
  std::vector<long long> orders;
  for (const auto& d : smith_normal_form(coords).diagonal())
    if (d > 1) orders.push_back(to_ll(d));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

long long QuotientModel::size() const {
  return std::accumulate(orders.begin(), orders.end(), 1LL, std::multiplies<>());
}

std::vector<IntVector> QuotientModel::representatives() const {
  std::size_t dim = inner.ambient_dim();
  std::vector<IntVector> out;
  std::vector<long long> k(orders.size(), 0);
  while (true) {
    IntVector v(dim, 0);
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t t = 0; t < dim; ++t) v[t] += k[i] * generators[i][t];
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < orders.size() && ++k[i] == orders[i]) k[i++] = 0;
    if (i == orders.size()) break;
  }
  return out;
}

QuotientModel quotient_model(const IntegerLattice& outer, const IntegerLattice& inner) {
  if (inner.rank() != outer.rank() || !outer.contains(inner)) {
    throw InputError("quotient: inner lattice must be a full-rank sublattice of the outer lattice");
  }
  IntMatrix k;
  for (const auto& v : inner.basis()) k.push_back(*outer.coordinates(v));
  SmithForm s = smith_normal_form(k);
  auto diag = s.diagonal();
  IntMatrix v_int(s.V.size(), IntVector(s.V.size()));
  for (std::size_t i = 0; i < s.V.size(); ++i)
    for (std::size_t j = 0; j < s.V.size(); ++j) v_int[i][j] = to_ll(s.V[i][j]);
  RationalMatrix v_inv = *inverse(to_rational(v_int));

  QuotientModel q;
  q.outer = outer;
  q.inner = inner;
  q.to_cyclic.assign(outer.rank(), IntVector{});
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] <= 1) continue;
    q.orders.push_back(to_ll(diag[i]));
    // g_i = (row i of V^{-1}) B; inner is spanned by d_i g_i.
    IntVector g(outer.ambient_dim(), 0);
    for (std::size_t j = 0; j < outer.rank(); ++j) {
      long long c = to_ll(v_inv[i][j].numerator());
      for (std::size_t t = 0; t < g.size(); ++t) g[t] += c * outer.basis()[j][t];
    }
    q.generators.push_back(std::move(g));
    for (std::size_t r = 0; r < outer.rank(); ++r) q.to_cyclic[r].push_back(v_int[r][i]);
  }
  return q;
}

FiniteAbelianGroup subgroup_structure(const QuotientModel& q, const std::vector<IntVector>& elements) {
  const std::size_t k = q.orders.size();
  if (k == 0) return {};
  IntMatrix rel(k, IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = q.orders[i];
  IntMatrix span = rel;
  for (const auto& e : elements) {
    auto x = q.outer.coordinates(e);
    if (!x) throw InputError("subgroup_structure: element is not in the outer lattice");
    IntVector y = multiply(transpose(q.to_cyclic), *x);
    for (std::size_t i = 0; i < k; ++i) y[i] = ((y[i] % q.orders[i]) + q.orders[i]) % q.orders[i];
    span.push_back(std::move(y));
  }
  return saturation_quotient(IntegerLattice::from_generators(span, k), IntegerLattice(rel, k));
}

FiniteAbelianGroup center(const RootSystem& rs) {
  std::vector<long long> orders;
  for (const auto& d : smith_normal_form(rs.cartan()).diagonal()) orders.push_back(to_ll(d));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

IntegerLattice coroot_lattice(const RootSystem& rs) {
  return IntegerLattice(transpose(rs.cartan()), static_cast<std::size_t>(rs.rank()));
}

IntegerLattice coroot_sublattice(const RootSystem& rs, const std::vector<Root>& roots) {
  IntMatrix gens;
  for (const auto& r : roots) gens.push_back(rs.coroot(r));
  return IntegerLattice::from_generators(gens, static_cast<std::size_t>(rs.rank()));
}

long long kernel_size_mod(const IntMatrix& a, long long m) {
  if (m < 1) throw InputError("modulus must be positive");
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto diag = smith_normal_form(a).diagonal();
  long long total = 1;
  for (std::size_t j = 0; j < cols; ++j) {
    long long d = j < diag.size() ? to_ll(abs(diag[j])) : 0;
    total *= std::gcd(d, m);
  }
  return total;
}

}  // namespace alcove
