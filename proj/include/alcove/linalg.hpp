#pragma once

#include "alcove/rational.hpp"

#include <optional>
#include <vector>

namespace alcove {

using IntVector = std::vector<long long>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<RationalVector>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& v);
RationalVector multiply(const IntMatrix& a, const RationalVector& v);
RationalVector multiply(const RationalMatrix& a, const RationalVector& v);
IntMatrix transpose(const IntMatrix& a);
RationalMatrix to_rational(const IntMatrix& a);

long long dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RationalVector& b);

// Exact Gaussian elimination over Q.
std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(RationalMatrix m);

// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

// Basis (as rows) of { x : A x = 0 }.
RationalMatrix nullspace(const RationalMatrix& a);

}  // namespace alcove
