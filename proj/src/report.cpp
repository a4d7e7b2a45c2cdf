#include "alcove/report.hpp"

#include "alcove/intlat.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace alcove {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const Integer& n) {
  if (n <= std::numeric_limits<long long>::max() && n >= std::numeric_limits<long long>::min()) {
    return static_cast<long long>(n);
  }
  return n.str();
}

Json to_json(const FiniteAbelianGroup& g) {
  return Json{{"label", g.to_string()}, {"order", g.order()}, {"invariant_factors", g.invariant_factors()}};
}

namespace {

Json type_names(const std::vector<SimpleType>& factors) {
  Json out = Json::array();
  for (const auto& f : factors) out.push_back(f.name());
  return out;
}

Json roots_json(const std::vector<Root>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

}  // namespace

Json to_json(const SubsystemDescriptor& sd) {
  return Json{{"label", sd.label()},
              {"factors", type_names(sd.factors)},
              {"rank", sd.subsystem_rank},
              {"positive_root_count", sd.positive_roots.size()},
              {"base", roots_json(sd.base)},
              {"highest_roots", roots_json(sd.highest)}};
}

Json to_json(const CentralizerDescriptor& cd) {
  Json stages = Json::array();
  for (const auto& s : cd.stages) {
    Json st{{"point", to_json(s.point)},
            {"subsystem", s.subsystem.label()},
            {"component_group", to_json(s.component_group)},
            {"lattice_quotient", to_json(s.lattice_quotient)},
            {"quotient_reading", s.quotient_reading ? Json(*s.quotient_reading) : Json(nullptr)}};
    if (!s.note.empty()) st["note"] = s.note;
    stages.push_back(std::move(st));
  }
  Json out{{"subsystem", to_json(cd.subsystem)},
           {"torus_rank", cd.torus_rank},
           {"component_group", to_json(cd.component_group)},
           {"lattice_quotient", to_json(cd.lattice_quotient)},
           {"direct_pi0_order", cd.direct_pi0_order ? Json(*cd.direct_pi0_order) : Json(nullptr)},
           {"stages", std::move(stages)}};
  if (!cd.note.empty()) out["note"] = cd.note;
  return out;
}

Json to_json(const FixedSpace& fs) {
  Json vertices = Json::array(), directions = Json::array();
  for (const auto& v : fs.vertices) vertices.push_back(to_json(v));
  for (const auto& d : fs.directions) directions.push_back(to_json(d));
  return Json{{"dimension", fs.dimension},
              {"basepoint", to_json(fs.basepoint)},
              {"vertices", std::move(vertices)},
              {"directions", std::move(directions)}};
}

Json info_report(const RootSystem& rs) {
  ExtendedDiagram ed = extended_diagram(rs);
  FiniteAbelianGroup z = center(rs);
  Json center_json = to_json(z);
  std::vector<int> specials = special_nodes(rs);
  center_json["special_nodes"] = specials;
  Json roots = Json::array();
  for (const auto& a : rs.roots()) roots.push_back(to_json(a));
  Json nodes = Json::array(), edges = Json::array();
  for (int i = 0; i < ed.size(); ++i) {
    bool special = std::find(specials.begin(), specials.end(), i) != specials.end();
    nodes.push_back(Json{{"id", i}, {"mark", ed.marks[i]}, {"comark", ed.comarks[i]}, {"special", special}});
    for (int j = i + 1; j < ed.size(); ++j)
      if (ed.cartan[i][j] != 0)
        edges.push_back(Json{{"source", i}, {"target", j}, {"cartan", {ed.cartan[i][j], ed.cartan[j][i]}}});
  }
  return Json{{"rank", rs.rank()},
              {"cartan", to_json(rs.cartan())},
              {"roots", std::move(roots)},
              {"root_count", rs.roots().size()},
              {"positive_root_count", rs.positive_roots().size()},
              {"weyl_order", to_json(rs.weyl_order())},
              {"simple_lengths", to_json(rs.simple_lengths())},
              {"highest_root", to_json(rs.highest_root())},
              {"marks", to_json(rs.marks())},
              {"comarks", to_json(rs.comarks())},
              {"cartan_determinant", to_json(determinant(to_rational(rs.cartan())).numerator())},
              {"center", std::move(center_json)},
              {"extended_cartan", to_json(ed.cartan)},
              {"diagram", Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}}},
              {"diagram_automorphisms", automorphism_group(ed).size()}};
}

Json centralizer_report(const RootSystem& rs, const std::vector<RationalVector>& tuple, const SearchLimits& limits) {
  Json points = Json::array();
  for (const auto& p : tuple) points.push_back(to_json(p));
  Json out{{"points", std::move(points)}};
  out.update(to_json(centralizer_tuple(rs, tuple, limits)));
  return out;
}

Json bds_report(const RootSystem& rs, bool all, const SearchLimits& limits) {
  Json maximal = Json::array();
  for (const auto& sd : bds_maximal(rs)) {
    Json entry = to_json(sd);
    entry["lattice_invariant"] = to_json(saturation_quotient(coroot_lattice(rs), coroot_sublattice(rs, sd.base)));
    maximal.push_back(std::move(entry));
  }
  Json out{{"maximal", std::move(maximal)}};
  if (all) {
    Json entries = Json::array();
    for (const auto& e : bds_all(rs, limits)) {
      entries.push_back(Json{{"subsystem", to_json(e.subsystem)},
                             {"lattice_invariant", to_json(e.lattice_invariant)},
                             {"depth", e.depth},
                             {"parent", e.parent}});
    }
    out["all"] = std::move(entries);
  }
  return out;
}

Json types_report(const RootSystem& rs, const SearchLimits& limits) {
  Json entries = Json::array();
  for (const auto& ct : centralizer_types(rs, limits)) {
    entries.push_back(Json{{"label", ct.descriptor.subsystem.label()},
                           {"torus_rank", ct.descriptor.torus_rank},
                           {"point", to_json(ct.point)},
                           {"walls", ct.walls},
                           {"subsystem", to_json(ct.descriptor.subsystem)},
                           {"lattice_quotient", to_json(ct.descriptor.lattice_quotient)}});
  }
  return Json{{"count", entries.size()}, {"types", std::move(entries)}};
}

Json chains_report(const RootSystem& rs, bool component_steps, const SearchLimits& limits) {
  ChainOptions opts;
  opts.include_component_steps = component_steps;
  opts.limits = limits;
  ChainBound cb = max_chain(rs, opts);
  Json witness = Json::array();
  for (const auto& node : cb.witness) {
    witness.push_back(Json{{"depth", node.depth},
                           {"step", node.step},
                           {"point", to_json(node.point)},
                           {"subsystem", node.descriptor.subsystem.label()},
                           {"subsystem_rank", node.descriptor.subsystem.subsystem_rank},
                           {"positive_root_count", node.descriptor.subsystem.positive_roots.size()},
                           {"torus_rank", node.descriptor.torus_rank},
                           {"component_group", node.descriptor.component_group.to_string()}});
  }
  Json out{{"m", cb.m}, {"m_connected", cb.m_connected}};
  out["m_with_components"] = cb.m_with_components ? Json(*cb.m_with_components) : Json(nullptr);
  out["witness"] = std::move(witness);
  return out;
}

Json moduli_report(const RootSystem& rs, long long level, bool direct, int special_node, const SearchLimits& limits) {
  Json out{{"level", level}, {"burnside_count", to_json(count_pairs_burnside(rs, level, limits))}};
  out["direct_count"] = direct ? to_json(count_pairs_direct(rs, level, limits)) : Json(nullptr);
  CPairData d = cpair_fixed_space(rs, special_node);
  out["cpair"] = Json{{"c", d.node}, {"dim", d.fixed.dimension}, {"basepoint", to_json(d.fixed.basepoint)}};
  return out;
}

Json cpair_report(const RootSystem& rs, int special_node) {
  CPairData d = cpair_fixed_space(rs, special_node);
  return Json{{"center_node", d.node},
              {"order", d.order},
              {"delta_c", d.delta},
              {"w_c", to_json(d.w_c.matrix())},
              {"zeta", to_json(d.zeta)},
              {"phi_offset", to_json(d.phi.offset)},
              {"node_permutation", d.rotation.image},
              {"fixed_space", to_json(d.fixed)}};
}

Json fold_report(const RootSystem& rs, int k) {
  FoldDescriptor fd = fold_cyclic(rs, k);
  return Json{{"k", fd.k},
              {"l", fd.l},
              {"factors", type_names(fd.factors)},
              {"label", factors_to_string(fd.factors)},
              {"torus_rank", fd.torus_rank},
              {"rotation_order", fd.rotation_order},
              {"removed_orbit", fd.removed_orbit},
              {"node_permutation", fd.rotation.image},
              {"fixed_space", to_json(fd.fixed)}};
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (!is_flat(x)) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string inline_form(const Json& j) {
  if (!j.is_array()) return scalar(j);
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_form(j[i]);
  return out + "]";
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        os << pad << key << ": " << inline_form(value) << "\n";
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_flat(item)) {
        os << pad << "- " << inline_form(item) << "\n";
      } else {
        os << pad << "-\n";
        render(os, item, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace alcove
