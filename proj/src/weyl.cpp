#include "alcove/weyl.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

namespace alcove {

void check_dimension(const RootSystem& rs, const RationalVector& t) {
  if (static_cast<int>(t.size()) != rs.rank()) {
    throw InputError("point has " + std::to_string(t.size()) + " coordinates; " + rs.type().name() + " needs " +
                     std::to_string(rs.rank()));
  }
}

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.matrix_ = identity_matrix(rank);
  w.coroot_matrix_ = identity_matrix(rank);
  w.translation_.assign(rank, 0);
  return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const Root& a) {
  const int n = rs.rank();
  WeylElement w = identity(n);
  IntVector cw = rs.coroot(a);
  IntVector cr = rs.coroot_in_coroot_basis(a);
  // s_a(t) = t - a(t) a^vee.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.matrix_[i][j] -= cw[i] * a[j];
  // On coroot coordinates a(C u) = (a^T C) u.
  IntVector at_c(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) at_c[j] += a[k] * rs.cartan()[k][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.coroot_matrix_[i][j] -= cr[i] * at_c[j];
  return w;
}

WeylElement WeylElement::affine_reflection(const RootSystem& rs, const Root& a, long long k) {
  // t ↦ t - (a(t) - k) a^vee = s_a(t) + k a^vee.
  WeylElement w = reflection(rs, a);
  IntVector cr = rs.coroot_in_coroot_basis(a);
  for (int i = 0; i < rs.rank(); ++i) w.translation_[i] = k * cr[i];
  return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int node) {
  if (node < 0 || node > rs.rank()) throw InputError("reflection node out of range");
  if (node == 0) return affine_reflection(rs, rs.highest_root(), 1);
  Root e(rs.rank(), 0);
  e[node - 1] = 1;
  return reflection(rs, e);
}

WeylElement WeylElement::translation(const RootSystem& rs, const IntVector& coroot_coords) {
  if (static_cast<int>(coroot_coords.size()) != rs.rank()) throw InputError("translation has wrong dimension");
  WeylElement w = identity(rs.rank());
  w.translation_ = coroot_coords;
  return w;
}

bool WeylElement::is_linear() const {
  for (long long x : translation_)
    if (x != 0) return false;
  return true;
}

WeylElement WeylElement::linear_part() const {
  WeylElement w = *this;
  std::fill(w.translation_.begin(), w.translation_.end(), 0);
  return w;
}

RationalVector WeylElement::apply(const RootSystem& rs, const RationalVector& t) const {
  RationalVector out = multiply(matrix_, t);
  if (!is_linear()) {
    IntVector shift = multiply(rs.cartan(), translation_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += Rational(shift[i]);
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  WeylElement w;
  w.matrix_ = multiply(matrix_, rhs.matrix_);
  w.coroot_matrix_ = multiply(coroot_matrix_, rhs.coroot_matrix_);
  w.translation_ = multiply(coroot_matrix_, rhs.translation_);
  for (std::size_t i = 0; i < w.translation_.size(); ++i) w.translation_[i] += translation_[i];
  return w;
}

WeylElement WeylElement::inverse() const {
  auto to_int = [](const RationalMatrix& m) {
    IntMatrix out(m.size(), IntVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].numerator().convert_to<long long>();
    return out;
  };
  WeylElement w;
  w.matrix_ = to_int(*alcove::inverse(to_rational(matrix_)));
  w.coroot_matrix_ = to_int(*alcove::inverse(to_rational(coroot_matrix_)));
  // t = M^{-1}(s - τ): translation part is -R^{-1} τ.
  w.translation_ = multiply(w.coroot_matrix_, translation_);
  for (auto& x : w.translation_) x = -x;
  return w;
}

RationalVector reflect(const RootSystem& rs, int node, const RationalVector& t) {
  check_dimension(rs, t);
  if (node < 1 || node > rs.rank()) throw InputError("reflection node out of range 1.." + std::to_string(rs.rank()));
  RationalVector out = t;
  const Rational ci = t[node - 1];
  if (ci.is_zero()) return out;
  for (int r = 0; r < rs.rank(); ++r)
    if (rs.cartan()[r][node - 1] != 0) out[r] -= ci * Rational(rs.cartan()[r][node - 1]);
  return out;
}

namespace {

// Lowest-index violated wall: 1..n simple, 0 affine, -1 none.
int violated_wall(const RootSystem& rs, const RationalVector& t) {
  for (int i = 0; i < rs.rank(); ++i)
    if (t[i].sign() < 0) return i + 1;
  if (RootSystem::evaluate(rs.highest_root(), t) > Rational(1)) return 0;
  return -1;
}

RationalVector apply_affine_reflection(const RootSystem& rs, const RationalVector& t) {
  // t - (d(t) - 1) d^vee.
  Rational k = RootSystem::evaluate(rs.highest_root(), t) - Rational(1);
  IntVector dv = rs.coroot(rs.highest_root());
  RationalVector out = t;
  for (int i = 0; i < rs.rank(); ++i)
    if (dv[i] != 0) out[i] -= k * Rational(dv[i]);
  return out;
}

}  // namespace

std::pair<RationalVector, WeylElement> reduce_to_alcove(const RootSystem& rs, const RationalVector& t) {
  check_dimension(rs, t);
  RationalVector cur = t;
  WeylElement w = WeylElement::identity(rs.rank());
  for (int wall = violated_wall(rs, cur); wall >= 0; wall = violated_wall(rs, cur)) {
    cur = wall == 0 ? apply_affine_reflection(rs, cur) : reflect(rs, wall, cur);
    w = WeylElement::simple_reflection(rs, wall) * w;
  }
  return {std::move(cur), std::move(w)};
}

RationalVector reduce_point(const RootSystem& rs, RationalVector t) {
  check_dimension(rs, t);
  for (int wall = violated_wall(rs, t); wall >= 0; wall = violated_wall(rs, t))
    t = wall == 0 ? apply_affine_reflection(rs, t) : reflect(rs, wall, t);
  return t;
}

RationalVector reduce_to_product_alcove(const RootSystem& rs, const std::vector<Root>& base,
                                        const std::vector<Root>& highest, RationalVector t) {
  check_dimension(rs, t);
  std::vector<IntVector> base_coroots, highest_coroots;
  for (const auto& b : base) base_coroots.push_back(rs.coroot(b));
  for (const auto& h : highest) highest_coroots.push_back(rs.coroot(h));
  auto shift = [&](const IntVector& coroot, const Rational& k) {
    for (std::size_t i = 0; i < t.size(); ++i)
      if (coroot[i] != 0) t[i] -= k * Rational(coroot[i]);
  };
  while (true) {
    bool moved = false;
    for (std::size_t i = 0; i < base.size() && !moved; ++i) {
      Rational v = RootSystem::evaluate(base[i], t);
      if (v.sign() < 0) {
        shift(base_coroots[i], v);
        moved = true;
      }
    }
    for (std::size_t k = 0; k < highest.size() && !moved; ++k) {
      Rational v = RootSystem::evaluate(highest[k], t);
      if (v > Rational(1)) {
        shift(highest_coroots[k], v - Rational(1));
        moved = true;
      }
    }
    if (!moved) return t;
  }
}

const std::vector<WeylElement>& weyl_group(const RootSystem& rs, const SearchLimits& limits) {
  if (rs.weyl_order() > limits.max_weyl_order) {
    throw ResourceError("|W(" + rs.type().name() + ")| = " + rs.weyl_order().str() + " exceeds the Weyl-order cap " +
                        std::to_string(limits.max_weyl_order));
  }
  static std::mutex mutex;
  static std::map<SimpleType, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(rs.type());
  if (it != cache.end()) return it->second;

  std::vector<WeylElement> gens;
  for (int i = 1; i <= rs.rank(); ++i) gens.push_back(WeylElement::simple_reflection(rs, i));
  std::vector<WeylElement> elements{WeylElement::identity(rs.rank())};
  std::map<IntMatrix, std::size_t> seen{{elements[0].matrix(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement next = g * elements[head];
      if (seen.emplace(next.matrix(), elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return cache.emplace(rs.type(), std::move(elements)).first->second;
}

std::vector<IntMatrix> reflection_group(const RootSystem& rs, const std::vector<Root>& generators, long long cap) {
  std::vector<IntMatrix> gens;
  for (const auto& a : generators) gens.push_back(WeylElement::reflection(rs, a).matrix());
  std::vector<IntMatrix> elements{identity_matrix(rs.rank())};
  std::set<IntMatrix> seen{elements[0]};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      IntMatrix next = multiply(g, elements[head]);
      if (!seen.insert(next).second) continue;
      if (static_cast<long long>(elements.size()) >= cap) {
        throw ResourceError("reflection group exceeds the Weyl-order cap " + std::to_string(cap));
      }
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

bool congruent_mod_coroot(const RootSystem& rs, const RationalVector& a, const RationalVector& b) {
  return rs.in_coroot_lattice(a - b);
}

std::vector<RationalVector> orbit(const RootSystem& rs, const RationalVector& t, const SearchLimits& limits) {
  check_dimension(rs, t);
  if (rs.weyl_order() > limits.max_weyl_order) {
    throw ResourceError("orbit of " + rs.type().name() + ": |W| exceeds the Weyl-order cap " +
                        std::to_string(limits.max_weyl_order));
  }
  std::vector<RationalVector> out{rs.canonical_mod_coroot(t)};
  std::unordered_set<RationalVector, RationalVectorHash> seen{out[0]};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rs.rank(); ++i) {
      RationalVector next = rs.canonical_mod_coroot(reflect(rs, i, out[head]));
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<WeylElement> stabilizer(const RootSystem& rs, const std::vector<RationalVector>& points,
                                    const SearchLimits& limits) {
  for (const auto& p : points) check_dimension(rs, p);
  std::vector<RationalVector> canon;
  for (const auto& p : points) canon.push_back(rs.canonical_mod_coroot(p));
  std::vector<WeylElement> out;
  for (const auto& w : weyl_group(rs, limits)) {
    bool fixes = true;
    for (std::size_t j = 0; j < points.size() && fixes; ++j)
      fixes = rs.canonical_mod_coroot(w.apply_linear(points[j])) == canon[j];
    if (fixes) out.push_back(w);
  }
  return out;
}

}  // namespace alcove
