#pragma once

#include "alcove/classify.hpp"
#include "alcove/intlat.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alcove {

// Closed root subsystem Ψ ⊆ Φ with a chosen base.
struct SubsystemDescriptor {
  std::vector<SimpleType> factors;   // sorted by (family, rank)
  int ambient_rank = 0;
  int subsystem_rank = 0;
  // Simple roots of Ψ, grouped by factor (same order as `factors`) and listed
  // within each factor in that factor's Bourbaki numbering.
  std::vector<Root> base;
  // Highest root of each factor, relative to `base`.
  std::vector<Root> highest;
  // Ψ ∩ Φ+, in the ambient order of positive roots.
  std::vector<Root> positive_roots;

  std::string label() const { return factors_to_string(factors); }
  // Offset of factor k inside `base`.
  std::size_t factor_offset(std::size_t k) const;
};

// Descriptor of the subsystem whose positive roots are `positive` (which
// must be Ψ ∩ Φ+ for a closed symmetric Ψ). The base consists of the
// indecomposable elements of Ψ ∩ Φ+; the ambient height is a generic
// functional, so Ψ ∩ Φ+ is a positive system of Ψ.
SubsystemDescriptor subsystem_from_positive_roots(const RootSystem& rs, std::vector<Root> positive);

// Φ(x̄) = {a ∈ Φ : a(x_j) ∈ Z for every j}. Throws InputError on an empty tuple
// or wrongly sized points.
SubsystemDescriptor annihilator_subsystem(const RootSystem& rs, const std::vector<RationalVector>& tuple);

// Subsystem generated by a set of extended nodes (0 = ã = -d).
SubsystemDescriptor node_subsystem(const RootSystem& rs, const std::vector<int>& nodes);

// Cyclic group of order gcd{comark(i) : i ∉ kept}. `kept` must contain 0 and
// omit at least one node; throws InputError otherwise.
FiniteAbelianGroup pi1_gcd(const RootSystem& rs, const std::vector<int>& kept);
// The same group computed as saturation_quotient(Q^vee, Q^vee(kept)).
FiniteAbelianGroup pi1_snf(const RootSystem& rs, const std::vector<int>& kept);

// Result of the lattice formula for the last element of a tuple.
struct ComponentGroupResult {
  FiniteAbelianGroup group;                // S ⊆ L_sat / Q^vee(Φ_prev)
  FiniteAbelianGroup ambient_quotient;     // L_sat / Q^vee(Φ_prev)
  std::vector<IntVector> elements;         // representatives of S (coweight coordinates)
  // |Stab_{W(Φ_prev)}(x_n mod L)| / |W(Φ(x̄))| when W(Φ_prev) is within the cap.
  std::optional<long long> quotient_reading;
};

// Component group attached to the last point x_n of the tuple, relative to
// the centralizer of the earlier points: with Φ_prev = Φ(x_1..x_{n-1}) (Φ for a
// single point) and L_sat = L ∩ span(Φ_prev^vee),
//   S = {λ ∈ L_sat / Q^vee(Φ_prev) : x_n + λ ∈ W_aff(Φ_prev) · x_n}.
// L must satisfy Q^vee ⊆ L ⊆ P^vee (coweight coordinates, so P^vee = Z^n).
ComponentGroupResult component_group(const RootSystem& rs, const std::vector<RationalVector>& tuple,
                                     const IntegerLattice& lattice, const SearchLimits& limits = {});

// The same computation with Φ_prev given directly; `next` must be
// Φ_prev ∩ Φ(x). The quotient reading is skipped when `with_reading` is false.
ComponentGroupResult component_group_relative(const RootSystem& rs, const SubsystemDescriptor& prev,
                                              const SubsystemDescriptor& next, const RationalVector& x,
                                              const IntegerLattice& lattice, bool with_reading,
                                              const SearchLimits& limits = {});

struct StageLog {
  RationalVector point;
  SubsystemDescriptor subsystem;
  FiniteAbelianGroup component_group;
  FiniteAbelianGroup lattice_quotient;      // (Q^vee ∩ span Φ_j^vee) / Q^vee(Φ_j)
  std::optional<long long> quotient_reading;
  // Empty when both readings agree or the second was not computed.
  std::string note;
};

struct CentralizerDescriptor {
  SubsystemDescriptor subsystem;
  int torus_rank = 0;
  FiniteAbelianGroup component_group;
  FiniteAbelianGroup lattice_quotient;
  std::vector<StageLog> stages;
  // |Stab_W(x̄ mod Q^vee)| / |W(Φ(x̄))|, enumerated inside W(Φ(x_j)) for the
  // x_j with the smallest Weyl group (which contains the stabilizer), when
  // that group is within the cap.
  std::optional<long long> direct_pi0_order;
  // Set when direct_pi0_order differs from the last-stage lattice group. The
  // stage formula is relative to the previous stage, so for three or more
  // points components inherited from earlier stages need not appear in it.
  std::string note;
};

CentralizerDescriptor centralizer_tuple(const RootSystem& rs, const std::vector<RationalVector>& tuple,
                                        const SearchLimits& limits = {});

// |W| of a product of simple factors.
Integer weyl_order(const std::vector<SimpleType>& factors);

}  // namespace alcove
