#pragma once

#include "alcove/diagram.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/weyl.hpp"

#include <vector>

namespace alcove {

// Number of W-orbits on pairs of m-torsion points of T = h / Q^vee, by
// Burnside: (1/|W|) Σ_w |ker(w - 1 on (Z/m)^rank)|^2. Throws ResourceError
// when |W| exceeds the cap and InputError when m < 1.
Integer count_pairs_burnside(const RootSystem& rs, long long m, const SearchLimits& limits = {});

// The same count by explicit orbit enumeration of (Z/m)^(2 rank) under the
// simple reflections. Throws ResourceError when m^(2 rank) exceeds the state budget.
Integer count_pairs_direct(const RootSystem& rs, long long m, const SearchLimits& limits = {});

// Δ(c): simple roots a with r_a ∉ Z, where λ = Σ r_a a^vee represents c. The
// center element is named by its special node.
std::vector<int> delta_c(const RootSystem& rs, int special_node);
// The same computed from an arbitrary representative λ (coweight coordinates).
std::vector<int> delta_c_from(const RootSystem& rs, const RationalVector& lambda);

struct CPairData {
  int node = 0;                   // special node naming c
  int order = 1;                  // order of c in the center
  WeylElement w_c;
  AffineMap phi;                  // φ(t) = w_c(t - ζ)
  RationalVector zeta;
  std::vector<int> delta;         // Δ(c), simple-node indices 1..rank
  DiagramAutomorphism rotation;   // action on extended nodes
  FixedSpace fixed;               // A^c
};

CPairData cpair_fixed_space(const RootSystem& rs, int special_node);

}  // namespace alcove
