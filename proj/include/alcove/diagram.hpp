#pragma once

#include "alcove/linalg.hpp"
#include "alcove/rational.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/weyl.hpp"

#include <vector>

namespace alcove {

// Extended Dynkin diagram: node 0 is ã = -d, nodes 1..n the simple roots.
struct ExtendedDiagram {
  struct Edge {
    int a = 0;
    int b = 0;
    long long ab = 0;  // -Ĉ[a][b]
    long long ba = 0;  // -Ĉ[b][a]
    // Laces drawn in the diagram: max(ab, ba); Ã1 shows as a double bond.
    long long bond() const { return std::max(ab, ba); }
  };

  SimpleType type;
  IntMatrix cartan;   // (n+1)x(n+1), Ĉ[i][j] = α_i(α_j^vee)
  IntVector marks;    // marks[0] = 1
  IntVector comarks;  // comarks[0] = 1

  int size() const { return static_cast<int>(cartan.size()); }
  std::vector<Edge> edges() const;
  // Cartan matrix of the nodes in `keep` (in the given order).
  IntMatrix restrict_to(const std::vector<int>& keep) const;
};

ExtendedDiagram extended_diagram(const RootSystem& rs);

// Permutation of extended nodes: image[i] is where node i goes.
struct DiagramAutomorphism {
  std::vector<int> image;

  bool is_identity() const;
  int order() const;
  // (*this) ∘ rhs.
  DiagramAutomorphism operator*(const DiagramAutomorphism& rhs) const;
  // Orbits in increasing order of their smallest node.
  std::vector<std::vector<int>> orbits() const;

  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend auto operator<=>(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

bool is_automorphism(const ExtendedDiagram& ed, const std::vector<int>& image);

// Every permutation preserving Ĉ, marks and comarks, sorted lexicographically
// (identity first).
std::vector<DiagramAutomorphism> automorphism_group(const ExtendedDiagram& ed);

// Affine map t ↦ L t + b on coweight coordinates.
struct AffineMap {
  IntMatrix linear;
  RationalVector offset;
  RationalVector apply(const RationalVector& t) const;
};

// Special nodes (mark 1, including ã); they index the center P^vee / Q^vee.
std::vector<int> special_nodes(const RootSystem& rs);
void check_special(const RootSystem& rs, int node);

// The alcove symmetry induced by the center element c = exp(ϖ_s^vee):
//   φ(t) = u(t + ϖ_s^vee), u ∈ W_aff the element carrying A + ϖ_s^vee back to A.
// Its linear part is w_c; φ sends vertex v_0 to v_s, so c is labelled by s.
struct CenterAction {
  int node = 0;
  RationalVector coweight;   // ϖ_s^vee (zero for s = 0)
  WeylElement w_c;           // linear part of u
  AffineMap phi;
  DiagramAutomorphism permutation;
};

CenterAction center_action(const RootSystem& rs, int special_node);
DiagramAutomorphism center_automorphism(const RootSystem& rs, int special_node);
// Product in P^vee / Q^vee, expressed again by special nodes.
int center_multiply(const RootSystem& rs, int s1, int s2);
int center_order(const RootSystem& rs, int s);

// Points of the closed alcove fixed by φ_c: the convex hull of the barycenters
// of the vertex orbits of the permutation.
struct FixedSpace {
  int dimension = 0;
  std::vector<RationalVector> vertices;    // one per orbit
  RationalVector basepoint;                // average of the vertices
  std::vector<RationalVector> directions;  // vertices[i] - vertices[0]
};
FixedSpace alcove_fixed_space(const RootSystem& rs, const CenterAction& action);

RationalVector alcove_barycenter(const RootSystem& rs);

// A_n / Z_k for k | n+1, via the rotation by l = (n+1)/k (order k).
struct FoldDescriptor {
  SimpleType type;
  int k = 1;
  int l = 1;
  std::vector<int> removed_orbit;         // orbit of ã: {0, l, 2l, ...}
  std::vector<SimpleType> factors;        // k copies of A_{l-1} (none when l = 1)
  int torus_rank = 0;                     // k - 1
  int rotation_order = 1;                 // k
  DiagramAutomorphism rotation;
  FixedSpace fixed;                       // fixed set of the rotation in the alcove
};

FoldDescriptor fold_cyclic(const RootSystem& rs, int k);

}  // namespace alcove
