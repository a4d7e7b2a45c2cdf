#include "alcove/moduli.hpp"

#include "alcove/errors.hpp"
#include "alcove/intlat.hpp"

#include <stdexcept>

namespace alcove {

namespace {

void check_level(long long m) {
  if (m < 1) throw InputError("torsion level must be at least 1, got " + std::to_string(m));
}

}  // namespace

Integer count_pairs_burnside(const RootSystem& rs, long long m, const SearchLimits& limits) {
  check_level(m);
  const auto& group = weyl_group(rs, limits);
  Integer total = 0;
  for (const auto& w : group) {
    IntMatrix a = w.coroot_matrix();
    for (int i = 0; i < rs.rank(); ++i) a[i][i] -= 1;
    Integer fixed = kernel_size_mod(a, m);
    total += fixed * fixed;
  }
  if (total % group.size() != 0) throw std::logic_error("Burnside sum is not divisible by |W|");
  return total / group.size();
}

Integer count_pairs_direct(const RootSystem& rs, long long m, const SearchLimits& limits) {
  check_level(m);
  const int n = rs.rank();
  const int dims = 2 * n;
  long long states = 1;
  for (int i = 0; i < dims; ++i) {
    if (states > limits.max_states / m) {
      throw ResourceError("direct count needs m^(2 rank) states, above the budget " + std::to_string(limits.max_states));
    }
    states *= m;
  }
  std::vector<IntMatrix> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(WeylElement::simple_reflection(rs, i).coroot_matrix());

  auto decode = [&](long long code) {
    IntVector v(dims);
    for (int i = 0; i < dims; ++i) {
      v[i] = code % m;
      code /= m;
    }
    return v;
  };
  auto encode = [&](const IntVector& v) {
    long long code = 0;
    for (int i = dims - 1; i >= 0; --i) code = code * m + v[i];
    return code;
  };
  auto act = [&](const IntMatrix& g, const IntVector& v) {
    IntVector out(dims);
    for (int half = 0; half < 2; ++half)
      for (int i = 0; i < n; ++i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += g[i][j] * v[half * n + j];
        out[half * n + i] = ((s % m) + m) % m;
      }
    return out;
  };

  std::vector<bool> seen(static_cast<std::size_t>(states), false);
  std::vector<long long> stack;
  Integer orbits = 0;
  for (long long start = 0; start < states; ++start) {
    if (seen[start]) continue;
    ++orbits;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      IntVector v = decode(stack.back());
      stack.pop_back();
      for (const auto& g : gens) {
        long long c = encode(act(g, v));
        if (!seen[c]) {
          seen[c] = true;
          stack.push_back(c);
        }
      }
    }
  }
  return orbits;
}

std::vector<int> delta_c_from(const RootSystem& rs, const RationalVector& lambda) {
  check_dimension(rs, lambda);
  RationalVector r = rs.to_coroot_basis(lambda);
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i)
    if (!r[i].is_integer()) out.push_back(i + 1);
  return out;
}

std::vector<int> delta_c(const RootSystem& rs, int special_node) {
  check_special(rs, special_node);
  RationalVector lambda(rs.rank());
  if (special_node > 0) lambda[special_node - 1] = Rational(1);
  return delta_c_from(rs, lambda);
}

CPairData cpair_fixed_space(const RootSystem& rs, int special_node) {
  CenterAction act = center_action(rs, special_node);
  CPairData out;
  out.node = special_node;
  out.order = center_order(rs, special_node);
  out.w_c = act.w_c;
  out.phi = act.phi;
  out.rotation = act.permutation;
  out.delta = delta_c(rs, special_node);
  auto inv = inverse(to_rational(act.phi.linear));
  if (!inv) throw std::logic_error("w_c is not invertible");
  RationalVector z = multiply(*inv, act.phi.offset);
  for (auto& x : z) x = -x;
  out.zeta = std::move(z);
  out.fixed = alcove_fixed_space(rs, act);
  for (const auto& v : out.fixed.vertices)
    if (multiply(act.phi.linear, v - out.zeta) != v) throw std::logic_error("φ does not fix A^c");
  return out;
}

}  // namespace alcove
