#pragma once

#include "alcove/linalg.hpp"
#include "alcove/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alcove {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

// Irreducible reduced crystallographic type, e.g. A5 or E8.
//
// Rank constraints: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2, and the
// library caps every family at rank 8.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  // Case-insensitive "A5", "e8", ... Throws InputError on anything invalid.
  static SimpleType parse(std::string_view text);

  auto operator<=>(const SimpleType&) const = default;
};

constexpr int kMaxRank = 8;

bool is_valid(const SimpleType& t);
void validate(const SimpleType& t);
// Every valid type with rank <= max_rank, ordered by family then rank.
std::vector<SimpleType> all_types(int max_rank = kMaxRank);
Integer weyl_group_order(const SimpleType& t);

// Integer coefficients in the simple-root basis.
using Root = IntVector;

// Immutable root datum of a simple type.
//
// Node numbering follows Bourbaki's plates (simple roots a_1..a_n); node 0 is
// reserved for the extended root -d. The Cartan matrix convention is
// C[i][j] = a_i(a_j^vee): rows are roots, columns are coroots, so column j is
// the coweight-basis coordinate vector of a_j^vee.
class RootSystem {
 public:
  explicit RootSystem(SimpleType type);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }

  // Positive roots sorted by height, then by coefficients (descending), so the
  // simple roots come first in node order and the highest root is last.
  const std::vector<Root>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<std::size_t> root_index(const Root& r) const;
  bool is_root(const Root& r) const { return root_index(r).has_value(); }

  const Root& highest_root() const { return positive_.back(); }
  // Coefficients of d in the simple roots (node order 1..n).
  const IntVector& marks() const { return marks_; }
  // Coefficients of d^vee in the simple coroots.
  const IntVector& comarks() const { return comarks_; }

  // Squared lengths normalized so the short roots have length 1.
  const IntVector& simple_lengths() const { return lengths_; }
  long long squared_length(const Root& r) const;
  // 2(a, b) in the normalization above.
  long long inner2(const Root& a, const Root& b) const;

  // a(b^vee) for arbitrary roots a and b.
  long long pairing(const Root& a, const Root& b) const;
  // Coweight-basis coordinates of a^vee: component i is a_i(a^vee).
  IntVector coroot(const Root& a) const;
  // Coordinates of a^vee in the simple-coroot basis.
  IntVector coroot_in_coroot_basis(const Root& a) const;

  // a(t) for t in coweight coordinates.
  static Rational evaluate(const Root& a, const RationalVector& t) { return dot(a, t); }

  // Coweight <-> simple-coroot coordinates: u = C^{-1} c and c = C u.
  RationalVector to_coroot_basis(const RationalVector& c) const;
  RationalVector from_coroot_basis(const RationalVector& u) const;
  bool in_coroot_lattice(const RationalVector& c) const;
  // Representative of c + Q^vee with simple-coroot coordinates in [0, 1).
  RationalVector canonical_mod_coroot(const RationalVector& c) const;

  // Closed fundamental alcove: a_i(t) >= 0 and d(t) <= 1.
  bool in_alcove(const RationalVector& c) const;
  // Vertex opposite wall `node`: 0 for node 0, otherwise e_i / m_i.
  RationalVector alcove_vertex(int node) const;

  Integer weyl_order() const { return weyl_group_order(type_); }

 private:
  SimpleType type_;
  IntMatrix cartan_;
  IntVector lengths_;
  IntMatrix gram2_;
  std::vector<Root> positive_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
  IntVector marks_;
  IntVector comarks_;
  RationalMatrix cartan_inverse_;
};

RootSystem build(SimpleType type);

// Coordinates of a_j^vee in the fundamental-coweight basis (column j of the
// Cartan matrix); j is 1-based.
RationalVector coroot_in_coweight_basis(const RootSystem& rs, int j);

// Cartan matrix of the given type in Bourbaki numbering; no root enumeration.
IntMatrix cartan_matrix(const SimpleType& t);

}  // namespace alcove
