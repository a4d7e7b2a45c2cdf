#include "alcove/centralizer.hpp"

#include "alcove/diagram.hpp"
#include "alcove/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace alcove {

namespace {

long long height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0LL); }

IntMatrix coroots_of(const RootSystem& rs, const std::vector<Root>& roots) {
  IntMatrix out;
  for (const auto& r : roots) out.push_back(rs.coroot(r));
  return out;
}

SubsystemDescriptor full_subsystem(const RootSystem& rs) { return subsystem_from_positive_roots(rs, rs.positive_roots()); }

}  // namespace

std::size_t SubsystemDescriptor::factor_offset(std::size_t k) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += static_cast<std::size_t>(factors[i].rank);
  return off;
}

Integer weyl_order(const std::vector<SimpleType>& factors) {
  Integer total = 1;
  for (const auto& f : factors) total *= weyl_group_order(f);
  return total;
}

SubsystemDescriptor subsystem_from_positive_roots(const RootSystem& rs, std::vector<Root> positive) {
  std::sort(positive.begin(), positive.end(), [&](const Root& a, const Root& b) {
    return *rs.root_index(a) < *rs.root_index(b);
  });
  std::set<Root> members(positive.begin(), positive.end());
  std::vector<Root> indecomposable;
  for (const auto& beta : positive) {
    bool decomposes = false;
    for (const auto& gamma : positive) {
      if (height(gamma) >= height(beta)) break;  // sorted by height
      Root rest = beta;
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= gamma[i];
      if (members.count(rest)) {
        decomposes = true;
        break;
      }
    }
    if (!decomposes) indecomposable.push_back(beta);
  }

  const std::size_t k = indecomposable.size();
  IntMatrix cartan(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) cartan[i][j] = rs.pairing(indecomposable[i], indecomposable[j]);

  SubsystemDescriptor sd;
  sd.ambient_rank = rs.rank();
  sd.subsystem_rank = static_cast<int>(k);
  for (const auto& comp : classify_components(cartan)) {
    sd.factors.push_back(comp.type);
    const Root* top = nullptr;
    for (int node : comp.nodes) sd.base.push_back(indecomposable[node]);
    for (const auto& r : positive) {
      bool inside = std::any_of(comp.nodes.begin(), comp.nodes.end(),
                                [&](int node) { return rs.inner2(r, indecomposable[node]) != 0; });
      if (inside && (!top || height(r) > height(*top))) top = &r;
    }
    sd.highest.push_back(*top);
  }
  sd.positive_roots = std::move(positive);
  return sd;
}

SubsystemDescriptor annihilator_subsystem(const RootSystem& rs, const std::vector<RationalVector>& tuple) {
  if (tuple.empty()) throw InputError("annihilator_subsystem: empty tuple");
  for (const auto& t : tuple) check_dimension(rs, t);
  std::vector<Root> kept;
  for (const auto& a : rs.positive_roots()) {
    bool integral = std::all_of(tuple.begin(), tuple.end(),
                                [&](const RationalVector& t) { return RootSystem::evaluate(a, t).is_integer(); });
    if (integral) kept.push_back(a);
  }
  return subsystem_from_positive_roots(rs, std::move(kept));
}

namespace {

void check_node_set(const RootSystem& rs, const std::vector<int>& nodes) {
  std::set<int> seen;
  for (int v : nodes) {
    if (v < 0 || v > rs.rank()) throw InputError("extended node " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) throw InputError("repeated extended node " + std::to_string(v));
  }
  if (static_cast<int>(nodes.size()) > rs.rank()) throw InputError("node set must omit at least one extended node");
}

}  // namespace

SubsystemDescriptor node_subsystem(const RootSystem& rs, const std::vector<int>& nodes) {
  check_node_set(rs, nodes);
  // Barycenter of the face cut out by the walls of `nodes`.
  RationalVector p(rs.rank());
  long long count = 0;
  for (int i = 0; i <= rs.rank(); ++i) {
    if (std::find(nodes.begin(), nodes.end(), i) != nodes.end()) continue;
    p = p + rs.alcove_vertex(i);
    ++count;
  }
  return annihilator_subsystem(rs, {Rational(1, count) * p});
}

FiniteAbelianGroup pi1_gcd(const RootSystem& rs, const std::vector<int>& kept) {
  check_node_set(rs, kept);
  if (std::find(kept.begin(), kept.end(), 0) == kept.end()) throw InputError("kept node set must contain ã (node 0)");
  long long g = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) g = std::gcd(g, rs.comarks()[i - 1]);
  return FiniteAbelianGroup::cyclic(g);
}

FiniteAbelianGroup pi1_snf(const RootSystem& rs, const std::vector<int>& kept) {
  check_node_set(rs, kept);
  if (std::find(kept.begin(), kept.end(), 0) == kept.end()) throw InputError("kept node set must contain ã (node 0)");
  IntMatrix gens;
  for (int v : kept) {
    if (v == 0) {
      IntVector dv = rs.coroot(rs.highest_root());
      for (auto& x : dv) x = -x;
      gens.push_back(dv);
    } else {
      IntVector col(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) col[i] = rs.cartan()[i][v - 1];
      gens.push_back(col);
    }
  }
  return saturation_quotient(coroot_lattice(rs), IntegerLattice::from_generators(gens, rs.rank()));
}

ComponentGroupResult component_group_relative(const RootSystem& rs, const SubsystemDescriptor& prev,
                                              const SubsystemDescriptor& next, const RationalVector& x,
                                              const IntegerLattice& lattice, bool with_reading,
                                              const SearchLimits& limits) {
  check_dimension(rs, x);
  const auto n = static_cast<std::size_t>(rs.rank());
  if (lattice.ambient_dim() != n || lattice.rank() != n || !lattice.contains(coroot_lattice(rs))) {
    throw InputError("lattice L must satisfy Q^vee ⊆ L ⊆ P^vee");
  }

  ComponentGroupResult out;
  IntMatrix prev_coroots = coroots_of(rs, prev.base);
  IntegerLattice q_prev = IntegerLattice::from_generators(prev_coroots, n);
  IntegerLattice l_sat = prev.base.empty() ? IntegerLattice({}, n) : lattice.intersect_span(prev_coroots);
  QuotientModel q = quotient_model(l_sat, q_prev);
  out.ambient_quotient = FiniteAbelianGroup::from_cyclic_orders(q.orders);

  RationalVector target = reduce_to_product_alcove(rs, prev.base, prev.highest, x);
  for (const auto& lambda : q.representatives()) {
    RationalVector shifted = x;
    for (std::size_t i = 0; i < n; ++i) shifted[i] += Rational(lambda[i]);
    if (reduce_to_product_alcove(rs, prev.base, prev.highest, shifted) == target) out.elements.push_back(lambda);
  }
  out.group = subgroup_structure(q, out.elements);
  if (out.group.order() != static_cast<long long>(out.elements.size())) {
    throw std::logic_error("stabilizer set is not a subgroup of L_sat / Q^vee(Φ_prev)");
  }

  if (with_reading && weyl_order(prev.factors) <= limits.max_weyl_order) {
    std::vector<IntMatrix> group;
    if (prev.subsystem_rank == rs.rank() && prev.positive_roots.size() == rs.positive_roots().size()) {
      for (const auto& w : weyl_group(rs, limits)) group.push_back(w.matrix());
    } else {
      group = reflection_group(rs, prev.base, limits.max_weyl_order);
    }
    RationalMatrix to_coords = *inverse(to_rational(transpose(lattice.basis())));
    long long count = 0;
    for (const auto& w : group) {
      RationalVector diff = multiply(w, x) - x;
      if (is_integral(multiply(to_coords, diff))) ++count;
    }
    Integer denom = weyl_order(next.factors);
    if (count % denom != 0) throw std::logic_error("W(Φ(x̄)) does not divide the stabilizer order");
    out.quotient_reading = static_cast<long long>(count / denom);
  }
  return out;
}

ComponentGroupResult component_group(const RootSystem& rs, const std::vector<RationalVector>& tuple,
                                     const IntegerLattice& lattice, const SearchLimits& limits) {
  if (tuple.empty()) throw InputError("component_group: empty tuple");
  for (const auto& t : tuple) check_dimension(rs, t);
  std::vector<RationalVector> prefix(tuple.begin(), tuple.end() - 1);
  SubsystemDescriptor prev = prefix.empty() ? full_subsystem(rs) : annihilator_subsystem(rs, prefix);
  SubsystemDescriptor next = annihilator_subsystem(rs, tuple);
  return component_group_relative(rs, prev, next, tuple.back(), lattice, true, limits);
}

CentralizerDescriptor centralizer_tuple(const RootSystem& rs, const std::vector<RationalVector>& tuple,
                                        const SearchLimits& limits) {
  if (tuple.empty()) throw InputError("centralizer: empty tuple");
  for (const auto& t : tuple) check_dimension(rs, t);
  CentralizerDescriptor cd;
  IntegerLattice qv = coroot_lattice(rs);
  for (std::size_t j = 1; j <= tuple.size(); ++j) {
    std::vector<RationalVector> prefix(tuple.begin(), tuple.begin() + static_cast<long>(j));
    StageLog stage;
    stage.point = tuple[j - 1];
    stage.subsystem = annihilator_subsystem(rs, prefix);
    ComponentGroupResult cg = component_group(rs, prefix, qv, limits);
    stage.component_group = cg.group;
    stage.quotient_reading = cg.quotient_reading;
    stage.lattice_quotient = saturation_quotient(qv, coroot_sublattice(rs, stage.subsystem.base));
    if (cg.quotient_reading && *cg.quotient_reading != cg.group.order()) {
      stage.note = "stabilizer quotient has order " + std::to_string(*cg.quotient_reading) +
                   " but the lattice formula gives " + std::to_string(cg.group.order());
    }
    cd.stages.push_back(std::move(stage));
  }
  const StageLog& last = cd.stages.back();
  cd.subsystem = last.subsystem;
  cd.torus_rank = rs.rank() - cd.subsystem.subsystem_rank;
  cd.component_group = last.component_group;
  cd.lattice_quotient = last.lattice_quotient;
  // Stab_W(x̄) lies in Stab_W(x_j) = W(Φ(x_j)) for every j (G simply connected).
  std::optional<SubsystemDescriptor> anchor;
  for (const auto& x : tuple) {
    SubsystemDescriptor sd = annihilator_subsystem(rs, {x});
    if (!anchor || weyl_order(sd.factors) < weyl_order(anchor->factors)) anchor = std::move(sd);
  }
  if (weyl_order(anchor->factors) <= limits.max_weyl_order) {
    std::vector<IntMatrix> group = anchor->positive_roots.size() == rs.positive_roots().size()
                                       ? std::vector<IntMatrix>{}
                                       : reflection_group(rs, anchor->base, limits.max_weyl_order);
    if (group.empty())
      for (const auto& w : weyl_group(rs, limits)) group.push_back(w.matrix());
    long long count = 0;
    for (const auto& w : group) {
      bool fixes = std::all_of(tuple.begin(), tuple.end(),
                               [&](const RationalVector& x) { return rs.in_coroot_lattice(multiply(w, x) - x); });
      if (fixes) ++count;
    }
    Integer denom = weyl_order(cd.subsystem.factors);
    if (count % denom != 0) throw std::logic_error("W(Φ(x̄)) does not divide the stabilizer order");
    cd.direct_pi0_order = static_cast<long long>(count / denom);
    if (*cd.direct_pi0_order != cd.component_group.order()) {
      cd.note = "direct stabilizer count gives order " + std::to_string(*cd.direct_pi0_order) +
                " but the last-stage lattice group has order " + std::to_string(cd.component_group.order());
    }
  }
  return cd;
}

}  // namespace alcove
