#pragma once

#include "alcove/linalg.hpp"
#include "alcove/rational.hpp"
#include "alcove/rootsys.hpp"

#include <utility>
#include <vector>

namespace alcove {

// Resource caps shared by every search in the library. Exceeding one raises
// ResourceError; nothing is ever truncated silently.
struct SearchLimits {
  long long max_weyl_order = 2000;     // largest |W| that may be enumerated
  long long max_states = 4'000'000;    // generic budget for explicit enumerations
};

// Element of the affine Weyl group W ⋉ Q^vee acting on coweight coordinates:
// t ↦ M t + τ, where τ is stored in simple-coroot coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(int rank);
  // node 0 is the affine reflection in {d = 1}; nodes 1..n are simple.
  static WeylElement simple_reflection(const RootSystem& rs, int node);
  static WeylElement reflection(const RootSystem& rs, const Root& a);
  // Reflection in the hyperplane {a = k}.
  static WeylElement affine_reflection(const RootSystem& rs, const Root& a, long long k);
  static WeylElement translation(const RootSystem& rs, const IntVector& coroot_coords);

  int rank() const { return static_cast<int>(matrix_.size()); }
  // Linear part on coweight coordinates.
  const IntMatrix& matrix() const { return matrix_; }
  // Linear part on simple-coroot coordinates.
  const IntMatrix& coroot_matrix() const { return coroot_matrix_; }
  const IntVector& translation() const { return translation_; }
  bool is_linear() const;
  // The same element with its translation dropped.
  WeylElement linear_part() const;

  RationalVector apply(const RootSystem& rs, const RationalVector& t) const;
  // Linear part only, the action on h / Q^vee up to translation.
  RationalVector apply_linear(const RationalVector& t) const { return multiply(matrix_, t); }

  // (*this) ∘ rhs.
  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  IntMatrix matrix_;
  IntMatrix coroot_matrix_;
  IntVector translation_;
};

// Deterministic alcove walk: reflect through the lowest-index violated wall
// (a_1..a_n first, then the affine wall) until t lies in the closed alcove.
// Returns the alcove point t0 and w with w(t) = t0.
std::pair<RationalVector, WeylElement> reduce_to_alcove(const RootSystem& rs, const RationalVector& t);
// Same walk without tracking the group element.
RationalVector reduce_point(const RootSystem& rs, RationalVector t);

// Reduction for the affine Weyl group of a subsystem Ψ given by its simple
// roots and the highest root of each irreducible component. The result is the
// unique point of the orbit t + W_aff(Ψ) in the product alcove
//   { b(t) >= 0 for b in base, θ_k(t) <= 1 for each component k }.
RationalVector reduce_to_product_alcove(const RootSystem& rs, const std::vector<Root>& base,
                                        const std::vector<Root>& highest, RationalVector t);

RationalVector reflect(const RootSystem& rs, int node, const RationalVector& t);

// All elements of the finite Weyl group (linear, no translation), in BFS order
// from the identity. Cached per type; throws ResourceError when |W| exceeds
// limits.max_weyl_order.
const std::vector<WeylElement>& weyl_group(const RootSystem& rs, const SearchLimits& limits = {});

// Linear parts (coweight coordinates) of the reflection group generated by
// s_a for a in `generators`, identity first. Throws ResourceError beyond
// `cap` elements.
std::vector<IntMatrix> reflection_group(const RootSystem& rs, const std::vector<Root>& generators, long long cap);

bool congruent_mod_coroot(const RootSystem& rs, const RationalVector& a, const RationalVector& b);

// W-orbit of t in h / Q^vee; entries are canonical_mod_coroot representatives
// in BFS order.
std::vector<RationalVector> orbit(const RootSystem& rs, const RationalVector& t, const SearchLimits& limits = {});

// Elements of W fixing every point of the tuple modulo Q^vee.
std::vector<WeylElement> stabilizer(const RootSystem& rs, const std::vector<RationalVector>& points,
                                    const SearchLimits& limits = {});

void check_dimension(const RootSystem& rs, const RationalVector& t);

}  // namespace alcove
