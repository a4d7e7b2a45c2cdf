#pragma once

#include "alcove/centralizer.hpp"
#include "alcove/diagram.hpp"
#include "alcove/enumerate.hpp"
#include "alcove/moduli.hpp"
#include "alcove/rootsys.hpp"

#include <json.hpp>

#include <string>

namespace alcove {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Rationals are strings ("-1/3"); integers that may overflow int64 are
// numbers when they fit and decimal strings otherwise.
Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Integer& n);
Json to_json(const FiniteAbelianGroup& g);
Json to_json(const SubsystemDescriptor& sd);
Json to_json(const CentralizerDescriptor& cd);
Json to_json(const FixedSpace& fs);

// Report bodies of the CLI subcommands (without the envelope).
Json info_report(const RootSystem& rs);
Json centralizer_report(const RootSystem& rs, const std::vector<RationalVector>& tuple, const SearchLimits& limits);
Json bds_report(const RootSystem& rs, bool all, const SearchLimits& limits);
Json types_report(const RootSystem& rs, const SearchLimits& limits);
Json chains_report(const RootSystem& rs, bool component_steps, const SearchLimits& limits);
// Includes the c-pair summary {c, dim, basepoint} for the given special node.
Json moduli_report(const RootSystem& rs, long long level, bool direct, int special_node, const SearchLimits& limits);
Json cpair_report(const RootSystem& rs, int special_node);
Json fold_report(const RootSystem& rs, int k);

// Indented plain-text rendering of a report.
std::string render_text(const Json& report);

}  // namespace alcove
