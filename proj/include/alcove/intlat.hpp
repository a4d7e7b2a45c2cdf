#pragma once

#include "alcove/linalg.hpp"
#include "alcove/rational.hpp"
#include "alcove/rootsys.hpp"

#include <string>
#include <vector>

namespace alcove {

using BigMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
  BigMatrix U;  // rows x rows, unimodular
  BigMatrix D;  // rows x cols, diagonal with d_1 | d_2 | ... (zeros last)
  BigMatrix V;  // cols x cols, unimodular
  // Diagonal of D (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

// U * M * V = D. Pivots are chosen by minimal nonzero absolute value.
SmithForm smith_normal_form(const BigMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

BigMatrix to_big(const IntMatrix& m);
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);

// Finite abelian group in invariant-factor form d_1 | d_2 | ... with d_i >= 2.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Any list of cyclic orders; entries <= 1 are dropped. Throws InputError on
  // zero or negative orders.
  static FiniteAbelianGroup from_cyclic_orders(const std::vector<long long>& orders);
  static FiniteAbelianGroup cyclic(long long n) { return from_cyclic_orders({n}); }

  const std::vector<long long>& invariant_factors() const { return factors_; }
  long long order() const;
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() <= 1; }
  // True iff this group is isomorphic to a subgroup of `other`.
  bool embeds_in(const FiniteAbelianGroup& other) const;
  // "1", "Z/3", "Z/2 x Z/2".
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<long long> factors_;
};

// Full-rank-in-its-span sublattice of Z^n, stored as independent basis rows.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  // Rows must be linearly independent; throws InputError otherwise.
  IntegerLattice(IntMatrix basis, std::size_t ambient_dim);
  // Lattice generated by arbitrary (possibly dependent) rows.
  static IntegerLattice from_generators(const IntMatrix& generators, std::size_t ambient_dim);
  static IntegerLattice standard(std::size_t n);

  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  // Integer coordinates of v in the basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  // Rational coordinates of v in the basis, if v lies in the rational span.
  std::optional<RationalVector> span_coordinates(const RationalVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const IntegerLattice& other) const;
  // Lattice points lying in the rational span of `directions`.
  IntegerLattice intersect_span(const IntMatrix& directions) const;

 private:
  IntMatrix basis_;
  std::size_t dim_ = 0;
};

// (ambient ∩ span_Q(sub)) / sub. Throws InputError unless sub ⊆ ambient.
FiniteAbelianGroup saturation_quotient(const IntegerLattice& ambient, const IntegerLattice& sub);

// Explicit model of a finite quotient outer/inner with span(inner) = span(outer):
// every element is written as sum k_i g_i with 0 <= k_i < orders_i.
struct QuotientModel {
  std::vector<long long> orders;    // cyclic orders >= 2 only
  std::vector<IntVector> generators;  // ambient coordinates of g_i
  IntegerLattice outer;
  IntegerLattice inner;
  IntMatrix to_cyclic;  // outer-basis coordinates -> (k_i), one column per order

  long long size() const;
  // All representatives in mixed-radix order of (k_1, k_2, ...).
  std::vector<IntVector> representatives() const;
};

// Throws InputError unless inner ⊆ outer with equal rank.
QuotientModel quotient_model(const IntegerLattice& outer, const IntegerLattice& inner);

// Structure of the subgroup of outer/inner generated by the given
// representatives (ambient coordinates, each lying in outer).
FiniteAbelianGroup subgroup_structure(const QuotientModel& q, const std::vector<IntVector>& elements);

// P^vee / Q^vee from the Smith form of the Cartan matrix.
FiniteAbelianGroup center(const RootSystem& rs);

// Q^vee in coweight coordinates (rows are the simple coroots).
IntegerLattice coroot_lattice(const RootSystem& rs);
// Coroot lattice of the roots `roots` (simple-root coefficients), in coweight
// coordinates.
IntegerLattice coroot_sublattice(const RootSystem& rs, const std::vector<Root>& roots);

// Number of x in (Z/m)^cols with A x = 0 mod m, i.e. prod gcd(d_i, m) with
// missing or zero diagonal entries counting as m.
long long kernel_size_mod(const IntMatrix& a, long long m);

}  // namespace alcove
