#pragma once

#include "alcove/linalg.hpp"
#include "alcove/rootsys.hpp"

#include <string>
#include <vector>

namespace alcove {

// One irreducible component of a Cartan matrix, with its nodes listed so that
// the restricted matrix equals cartan_matrix(type) in Bourbaki numbering.
struct CartanComponent {
  SimpleType type;
  std::vector<int> nodes;
};

// Connected components of a finite-type Cartan matrix, recognized up to
// simultaneous permutation. Components are sorted by (family, rank) and then
// by smallest node. B2/C2 are reported as B2 and D3 as A3.
//
// Throws InputError when M is not square, has a bad diagonal or sign pattern,
// a bond other than single/double/triple, a cycle, or fails the positive
// definiteness test.
std::vector<CartanComponent> classify_components(const IntMatrix& m);

// Multiset of simple types of M, sorted by (family, rank).
std::vector<SimpleType> classify_cartan(const IntMatrix& m);

// "A1 x A1", "T" for an empty list.
std::string factors_to_string(const std::vector<SimpleType>& factors);

}  // namespace alcove
