// Acceptance suite: one PASS/FAIL line per criterion.

#include "alcove/centralizer.hpp"
#include "alcove/diagram.hpp"
#include "alcove/enumerate.hpp"
#include "alcove/intlat.hpp"
#include "alcove/moduli.hpp"
#include "alcove/weyl.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace alcove;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<SimpleType> types_up_to(int rank) { return all_types(rank); }

std::string criterion1() {
  int checked = 0;
  for (const auto& t : types_up_to(8)) {
    RootSystem rs(t);
    const std::string n = t.name();
    require(static_cast<long long>(rs.roots().size()) == oracle::root_count(t), n + ": |Φ|");
    Rational det = determinant(to_rational(rs.cartan()));
    FiniteAbelianGroup z = center(rs);
    require(det == Rational(z.order()), n + ": det(C) != |center|");
    require(z.order() == oracle::center_order(t), n + ": |center| closed form");
    for (long long m : rs.marks()) require(m >= 1 && m <= 6, n + ": mark out of range");
    for (long long m : rs.comarks()) require(m >= 1 && m <= 6, n + ": comark out of range");
    ++checked;
  }
  return std::to_string(checked) + " types";
}

std::string criterion2() {
  long long cases = 0;
  for (const auto& t : types_up_to(6)) {
    RootSystem rs(t);
    const int nodes = rs.rank() + 1;
    IntVector comarks = oracle::comarks(t);
    comarks.insert(comarks.begin(), 1);
    for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
      std::vector<int> kept;
      long long g = 0;
      for (int i = 0; i < nodes; ++i) {
        if (mask & (1u << i)) {
          kept.push_back(i);
        } else {
          g = std::gcd(g, comarks[i]);
        }
      }
      FiniteAbelianGroup snf;
      if (mask & 1u) {
        snf = pi1_snf(rs, kept);
        require(pi1_gcd(rs, kept) == snf, t.name() + ": pi1_gcd and pi1_snf differ");
      } else {
        IntMatrix gens;
        for (int v : kept) {
          IntVector col(rs.rank());
          for (int i = 0; i < rs.rank(); ++i) col[i] = rs.cartan()[i][v - 1];
          gens.push_back(col);
        }
        snf = saturation_quotient(coroot_lattice(rs), IntegerLattice::from_generators(gens, rs.rank()));
      }
      require(snf == FiniteAbelianGroup::cyclic(g), t.name() + ": saturation quotient vs gcd of removed comarks");
      ++cases;
    }
  }
  return std::to_string(cases) + " node subsets";
}

RationalVector random_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long long> den(1, 12);
  long long d = den(rng);
  std::uniform_int_distribution<long long> num(-3 * d, 3 * d);
  RationalVector p(n);
  for (auto& x : p) x = Rational(num(rng), d);
  return p;
}

WeylElement random_affine(const RootSystem& rs, std::mt19937& rng) {
  std::uniform_int_distribution<int> node(0, rs.rank());
  std::uniform_int_distribution<int> len(0, 12);
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i = len(rng); i > 0; --i) w = WeylElement::simple_reflection(rs, node(rng)) * w;
  return w;
}

std::string criterion3() {
  std::mt19937 rng(20240611);
  long long points = 0;
  for (const auto& t : types_up_to(4)) {
    RootSystem rs(t);
    const long long order = static_cast<long long>(rs.weyl_order());
    for (int i = 0; i < 1000; ++i) {
      RationalVector x = random_point(rng, rs.rank());
      RationalVector r = reduce_point(rs, x);
      require(rs.in_alcove(r), t.name() + ": reduction left the alcove");
      require(reduce_point(rs, r) == r, t.name() + ": reduction not idempotent");
      WeylElement w = random_affine(rs, rng);
      require(reduce_point(rs, w.apply(rs, x)) == r, t.name() + ": reduction not W_aff invariant");
      auto orb = orbit(rs, x);
      auto stab = stabilizer(rs, {x});
      require(static_cast<long long>(orb.size() * stab.size()) == order, t.name() + ": |orbit| * |stabilizer| != |W|");
      ++points;
    }
  }
  return std::to_string(points) + " random points";
}

std::string criterion4() {
  int checked = 0;
  for (const auto& t : types_up_to(4)) {
    RootSystem rs(t);
    oracle::ClosedSubsets closed(rs);
    std::set<oracle::Signature> expected;
    for (auto s : closed.maximal_full_rank()) expected.insert(oracle::signature(rs, closed.members(s)));
    std::set<oracle::Signature> got;
    auto bds = bds_maximal(rs);
    for (const auto& sd : bds) got.insert(oracle::signature_of_positive(rs, sd.positive_roots));
    if (expected.empty()) {
      require(bds.size() == 1 && bds[0].positive_roots.size() == rs.positive_roots().size(),
              t.name() + ": no proper maximal-rank subsystem, expected {Φ}");
    } else {
      require(got == expected, t.name() + ": bds_maximal differs from the closed-subset oracle");
      require(got.size() == bds.size(), t.name() + ": bds_maximal lists a class twice");
    }
    ++checked;
  }
  auto labels = [](const std::string& name) {
    std::set<std::string> out;
    for (const auto& sd : bds_maximal(RootSystem(SimpleType::parse(name)))) out.insert(sd.label());
    return out;
  };
  require(labels("G2") == std::set<std::string>{"A2", "A1 x A1"}, "G2 spot value");
  require(labels("F4") == std::set<std::string>{"B4", "A1 x C3", "A2 x A2"}, "F4 spot value");
  return std::to_string(checked) + " types + G2/F4 spot values";
}

std::string criterion5() {
  std::mt19937 rng(7);
  long long cases = 0;
  for (const auto& t : types_up_to(4)) {
    RootSystem rs(t);
    IntegerLattice qv = coroot_lattice(rs);
    std::set<RationalVector> seen;
    for (long long d = 1; d <= 4; ++d)
      for (const auto& p : oracle::alcove_points(rs, d)) {
        if (!seen.insert(p).second) continue;
        for (const auto& x : {p, random_affine(rs, rng).apply(rs, p)}) {
          require(component_group(rs, {x}, qv).group.is_trivial(),
                  t.name() + ": nontrivial component group at " + to_string(x));
          ++cases;
        }
      }
  }
  return std::to_string(cases) + " single-element tuples";
}

std::string criterion6() {
  long long cases = 0;
  for (const auto& t : types_up_to(3)) {
    RootSystem rs(t);
    IntVector comarks = oracle::comarks(t);
    std::set<RationalVector> firsts, seconds;
    for (long long d = 1; d <= 4; ++d) {
      for (const auto& p : oracle::alcove_points(rs, d)) firsts.insert(p);
      for (const auto& p : oracle::torsion_points(rs, d)) seconds.insert(p);
    }
    for (const auto& x1 : firsts) {
      // gcd of the comarks of the walls not containing x1 (ã has comark 1).
      long long g = 0;
      Rational top = RootSystem::evaluate(rs.highest_root(), x1);
      if (top != Rational(1)) g = 1;
      for (int i = 0; i < rs.rank(); ++i)
        if (x1[i] != Rational(0)) g = std::gcd(g, comarks[i]);
      if (g == 0) g = 1;
      FiniteAbelianGroup bound = FiniteAbelianGroup::cyclic(g);
      for (const auto& x2 : seconds) {
        CentralizerDescriptor cd = centralizer_tuple(rs, {x1, x2});
        require(cd.component_group.embeds_in(bound),
                t.name() + ": π0 of (" + to_string(x1) + ", " + to_string(x2) + ") exceeds π1");
        require(cd.stages.front().lattice_quotient == bound, t.name() + ": π1 of the first element");
        ++cases;
      }
    }
  }
  return std::to_string(cases) + " pairs";
}

std::string criterion7() {
  FoldDescriptor f = fold_cyclic(RootSystem(SimpleType::parse("A5")), 3);
  require(factors_to_string(f.factors) == "A1 x A1 x A1", "A5/Z3 factors");
  require(f.torus_rank == 2 && f.rotation_order == 3, "A5/Z3 torus rank and rotation order");
  for (int n = 1; n <= 8; ++n) {
    RootSystem rs({Family::A, n});
    FoldDescriptor g = fold_cyclic(rs, n + 1);
    require(g.factors.empty() && g.torus_rank == n && g.rotation_order == n + 1, "A" + std::to_string(n) + " full fold");
    require(g.fixed.dimension == 0 && g.fixed.vertices.size() == 1, "A" + std::to_string(n) + " fixed set not a point");
    require(g.fixed.basepoint == alcove_barycenter(rs), "A" + std::to_string(n) + " fixed point is not the barycenter");
  }
  return "A5/Z3 and A1..A8 full folds";
}

std::string criterion8() {
  long long cases = 0;
  for (const auto& t : types_up_to(3)) {
    RootSystem rs(t);
    for (long long m = 1; m <= 4; ++m) {
      require(count_pairs_burnside(rs, m) == count_pairs_direct(rs, m), t.name() + ": Burnside vs direct");
      ++cases;
    }
  }
  require(count_pairs_burnside(RootSystem(SimpleType::parse("A1")), 2) == 4, "A1 m=2 spot value");
  require(count_pairs_burnside(RootSystem(SimpleType::parse("A2")), 2) == 5, "A2 m=2 spot value");
  return std::to_string(cases) + " (type, level) cases + spot values";
}

std::string criterion9() {
  int checked = 0;
  for (const auto& t : types_up_to(8)) {
    RootSystem rs(t);
    ChainBound cb = max_chain(rs);
    require(static_cast<int>(cb.witness.size()) == cb.m, t.name() + ": witness length");
    ChainOptions vertex;
    vertex.vertex_only = true;
    if (rs.rank() <= 4) require(max_chain(rs, vertex).m == cb.m, t.name() + ": vertex-restricted m differs");
    ++checked;
  }
  auto m = [](const std::string& name) { return max_chain(RootSystem(SimpleType::parse(name))).m; };
  require(m("A1") == 1 && m("A2") == 2 && m("G2") == 3, "spot values m(A1), m(A2), m(G2)");
  return std::to_string(checked) + " types terminate; vertex search agrees for rank <= 4";
}

std::string criterion10() {
  require(centralizer_types(RootSystem(SimpleType::parse("A2"))).size() == 3, "centralizer_types(A2) size");
  long long points = 0;
  for (const auto& t : types_up_to(3)) {
    RootSystem rs(t);
    std::set<std::pair<std::vector<SimpleType>, int>> listed;
    for (const auto& ct : centralizer_types(rs)) listed.emplace(ct.descriptor.subsystem.factors, ct.descriptor.torus_rank);
    for (long long d = 1; d <= 6; ++d)
      for (const auto& p : oracle::alcove_points(rs, d)) {
        SubsystemDescriptor sd = annihilator_subsystem(rs, {p});
        require(listed.count({sd.factors, rs.rank() - sd.subsystem_rank}) == 1,
                t.name() + ": type at " + to_string(p) + " not listed");
        ++points;
      }
  }
  return "A2 has 3 types; " + std::to_string(points) + " sweep points covered";
}

std::string criterion11() {
  for (int n = 1; n <= 8; ++n) {
    RootSystem rs({Family::A, n});
    for (int s = 1; s <= n; ++s) {
      if (std::gcd(s, n + 1) != 1) continue;
      CPairData d = cpair_fixed_space(rs, s);
      require(d.fixed.dimension == 0 && d.fixed.basepoint == alcove_barycenter(rs),
              "A" + std::to_string(n) + " generator " + std::to_string(s));
    }
  }
  for (const auto& t : types_up_to(8)) {
    RootSystem rs(t);
    CPairData d = cpair_fixed_space(rs, 0);
    require(d.fixed.dimension == rs.rank() && static_cast<int>(d.fixed.vertices.size()) == rs.rank() + 1,
            t.name() + ": identity does not fix the whole alcove");
  }
  return "A1..A8 generators and identity for all types";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"root-system integrity", criterion1},
      {"lattice double-oracle", criterion2},
      {"affine Weyl reduction", criterion3},
      {"maximal-rank subsystems vs brute force", criterion4},
      {"single elements have connected centralizers", criterion5},
      {"pi0 of pairs embeds in pi1", criterion6},
      {"cyclic folding", criterion7},
      {"moduli double count", criterion8},
      {"chain bounds", criterion9},
      {"finitely many centralizer types", criterion10},
      {"c-pair fixed space", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, check] = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string status, detail;
    try {
      detail = check();
      status = "PASS";
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "FAIL") ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << status << " " << (i + 1) << " " << name << ": " << detail << " (" << secs << "s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
