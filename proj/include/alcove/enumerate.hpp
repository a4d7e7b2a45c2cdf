#pragma once

#include "alcove/centralizer.hpp"
#include "alcove/diagram.hpp"
#include "alcove/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alcove {

// Maximal-rank maximal closed subsystems from deleting one node of prime mark
// from the extended diagram, one per orbit of diagram automorphisms. Type A
// has no such node; its list is {Φ} (deleting a mark-1 node gives Φ back).
std::vector<SubsystemDescriptor> bds_maximal(const RootSystem& rs);

struct BdsEntry {
  SubsystemDescriptor subsystem;
  FiniteAbelianGroup lattice_invariant;  // saturation_quotient(Q^vee, Q^vee(Ψ))
  int depth = 0;                         // deletion steps from Φ
  int parent = -1;                       // index into the list, -1 for Φ
};

// All subsystems reachable from Φ by repeatedly deleting a node from the
// extended diagram of one factor (maximal-rank step) or from its plain
// diagram (Levi step), deduplicated by (factor multiset with the root
// lengths of each factor, lattice invariant).
// Breadth-first, so parents precede children; Φ is entry 0.
std::vector<BdsEntry> bds_all(const RootSystem& rs, const SearchLimits& limits = {});

struct CentralizerType {
  CentralizerDescriptor descriptor;
  RationalVector point;        // barycenter of a face realizing the type
  std::vector<int> walls;      // extended nodes whose walls contain that face
};

// One entry per (factors, torus rank) over all faces of the alcove, ordered by
// decreasing subsystem rank, then root count, then label.
std::vector<CentralizerType> centralizer_types(const RootSystem& rs, const SearchLimits& limits = {});

struct ChainNode {
  CentralizerDescriptor descriptor;
  RationalVector point;
  int depth = 0;
  std::string step;  // how the element was chosen
};

struct ChainBound {
  int m = 0;                            // reported bound
  int m_connected = 0;                  // chains of connected-centralizer data only
  std::optional<int> m_with_components; // with terminal component-group steps
  std::vector<ChainNode> witness;       // length m
};

struct ChainOptions {
  bool include_component_steps = false;
  // Only product vertices and central edges as candidate faces.
  bool vertex_only = false;
  // Enumerate candidate faces in reverse order (determinism check).
  bool reverse_order = false;
  SearchLimits limits{};
};

ChainBound max_chain(const RootSystem& rs, const ChainOptions& options = {});

// m for a product of simple factors (type-level recursion only).
int chain_length(const std::vector<SimpleType>& factors, bool vertex_only = false);

}  // namespace alcove
