#include "alcove/centralizer.hpp"
#include "alcove/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace alcove;

namespace {

RationalVector v(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::set<Root> root_set(const SubsystemDescriptor& sd) { return {sd.positive_roots.begin(), sd.positive_roots.end()}; }

}  // namespace

TEST_SUITE("centralizer") {
  TEST_CASE("annihilator examples") {
    RootSystem a2(SimpleType::parse("A2"));
    SubsystemDescriptor sd = annihilator_subsystem(a2, {v({0, Rational(1, 3)})});
    CHECK(sd.label() == "A1");
    CHECK(sd.subsystem_rank == 1);
    CHECK(sd.positive_roots == std::vector<Root>{{1, 0}});
    for (const auto& t : all_types(8)) {
      RootSystem rs(t);
      CHECK(annihilator_subsystem(rs, {RationalVector(rs.rank())}).positive_roots.size() == rs.positive_roots().size());
    }
    RootSystem g2(SimpleType::parse("G2"));
    CHECK(annihilator_subsystem(g2, {g2.alcove_vertex(2)}).label() == "A1 x A1");
    RootSystem b4(SimpleType::parse("B4"));
    CHECK(annihilator_subsystem(b4, {b4.alcove_vertex(4)}).label() == "D4");
    CHECK_THROWS_AS(annihilator_subsystem(a2, {}), InputError);
    CHECK_THROWS_AS(annihilator_subsystem(a2, {v({0})}), InputError);
  }

  TEST_CASE("bases are simple systems of the subsystem") {
    std::mt19937 rng(17);
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      std::uniform_int_distribution<long long> num(0, 6);
      for (int trial = 0; trial < 10; ++trial) {
        RationalVector x(rs.rank());
        for (auto& c : x) c = Rational(num(rng), 6);
        SubsystemDescriptor sd = annihilator_subsystem(rs, {x});
        int sum = 0;
        for (const auto& f : sd.factors) sum += f.rank;
        CHECK(sum == sd.subsystem_rank);
        CHECK(static_cast<int>(sd.base.size()) == sd.subsystem_rank);
        std::set<Root> members = root_set(sd);
        for (const auto& a : sd.base)
          for (const auto& b : sd.base) {
            CHECK(members.count(a) == 1);
            Root d = a;
            for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
            if (a != b) CHECK_FALSE(rs.is_root(d));
          }
      }
    }
  }

  TEST_CASE("annihilator of a tuple is the intersection") {
    std::mt19937 rng(23);
    for (const auto& t : all_types(4)) {
      RootSystem rs(t);
      std::uniform_int_distribution<long long> num(-4, 4);
      for (int trial = 0; trial < 20; ++trial) {
        RationalVector x(rs.rank()), y(rs.rank());
        for (auto& c : x) c = Rational(num(rng), 4);
        for (auto& c : y) c = Rational(num(rng), 3);
        std::set<Root> both = root_set(annihilator_subsystem(rs, {x, y}));
        std::set<Root> sx = root_set(annihilator_subsystem(rs, {x}));
        std::set<Root> sy = root_set(annihilator_subsystem(rs, {y}));
        std::set<Root> meet;
        for (const auto& r : sx)
          if (sy.count(r)) meet.insert(r);
        CHECK(both == meet);
      }
    }
  }

  TEST_CASE("descriptors depend only on the face") {
    std::mt19937 rng(29);
    for (const auto& t : all_types(5)) {
      RootSystem rs(t);
      const int nodes = rs.rank() + 1;
      std::uniform_int_distribution<long long> weight(1, 9);
      for (unsigned mask = 1; mask < (1u << nodes); ++mask) {
        std::vector<std::string> seen;
        for (int trial = 0; trial < 3; ++trial) {
          RationalVector p(rs.rank());
          long long total = 0;
          std::vector<long long> w(nodes, 0);
          for (int i = 0; i < nodes; ++i)
            if (mask & (1u << i)) total += w[i] = weight(rng);
          for (int i = 0; i < nodes; ++i)
            if (w[i]) p = p + Rational(w[i], total) * rs.alcove_vertex(i);
          CentralizerDescriptor cd = centralizer_tuple(rs, {p});
          seen.push_back(cd.subsystem.label() + "/" + std::to_string(cd.torus_rank));
          CHECK(cd.component_group.is_trivial());
        }
        CHECK(seen[0] == seen[1]);
        CHECK(seen[1] == seen[2]);
      }
    }
  }

  TEST_CASE("pi1 by gcd and by Smith form") {
    RootSystem g2(SimpleType::parse("G2"));
    CHECK(pi1_gcd(g2, {0, 1}) == FiniteAbelianGroup::cyclic(2));
    CHECK(pi1_snf(g2, {0, 1}) == FiniteAbelianGroup::cyclic(2));
    CHECK(pi1_gcd(g2, {0, 2}).is_trivial());
    CHECK(pi1_snf(g2, {0, 2}).is_trivial());
    CHECK_THROWS_AS(pi1_gcd(g2, {0, 1, 2}), InputError);
    CHECK_THROWS_AS(pi1_gcd(g2, {1}), InputError);
    RootSystem e8(SimpleType::parse("E8"));
    CHECK(pi1_snf(e8, {0, 1, 2, 3, 5, 6, 7, 8}) == FiniteAbelianGroup::cyclic(6));
  }

  TEST_CASE("G2 two-stage pair") {
    RootSystem g2(SimpleType::parse("G2"));
    RationalVector x1 = v({0, Rational(1, 2)});
    CentralizerDescriptor one = centralizer_tuple(g2, {x1});
    CHECK(one.subsystem.label() == "A1 x A1");
    CHECK(one.lattice_quotient == FiniteAbelianGroup::cyclic(2));
    CHECK(one.component_group.is_trivial());
    CentralizerDescriptor pair = centralizer_tuple(g2, {x1, v({Rational(1, 2), 0})});
    CHECK(pair.torus_rank == 2);
    CHECK(pair.component_group == FiniteAbelianGroup::cyclic(2));
    CHECK(pair.direct_pi0_order == 2);
    CHECK(pair.stages.back().quotient_reading == 2);
    CentralizerDescriptor generic = centralizer_tuple(g2, {x1, v({Rational(1, 7), Rational(1, 5)})});
    CHECK(generic.component_group.is_trivial());
  }

  TEST_CASE("pairs: lattice formula, quotient reading and direct count agree") {
    std::mt19937 rng(31);
    for (const auto& t : all_types(4)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      std::vector<RationalVector> pts;
      for (long long d = 1; d <= 4; ++d)
        for (const auto& p : oracle::torsion_points(rs, d)) pts.push_back(p);
      std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
      const long long order = static_cast<long long>(rs.weyl_order());
      for (int trial = 0; trial < 150; ++trial) {
        std::vector<RationalVector> tuple{pts[pick(rng)], pts[pick(rng)]};
        CentralizerDescriptor cd = centralizer_tuple(rs, tuple);
        REQUIRE(cd.direct_pi0_order);
        CHECK(*cd.direct_pi0_order == cd.component_group.order());
        for (const auto& s : cd.stages) CHECK(s.note.empty());
        CHECK(cd.note.empty());
        // Independent count over the whole Weyl group.
        if (order <= 1152) {
          auto stab = stabilizer(rs, tuple);
          CHECK(static_cast<long long>(stab.size()) ==
                *cd.direct_pi0_order * static_cast<long long>(weyl_order(cd.subsystem.factors)));
        }
      }
    }
  }

  TEST_CASE("longer tuples surface disagreement with the direct count") {
    RootSystem d4(SimpleType::parse("D4"));
    std::vector<RationalVector> tuple{v({Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(1, 2)}),
                                      v({1, Rational(-3, 2), 1, 1}), v({1, -1, 1, 0})};
    CentralizerDescriptor cd = centralizer_tuple(d4, tuple);
    REQUIRE(cd.direct_pi0_order);
    CHECK(cd.stages[1].component_group == FiniteAbelianGroup::cyclic(2));
    CHECK((*cd.direct_pi0_order != cd.component_group.order()) == !cd.note.empty());
  }

  TEST_CASE("component_group validates the lattice") {
    RootSystem a2(SimpleType::parse("A2"));
    RationalVector x = v({0, Rational(1, 3)});
    CHECK(component_group(a2, {x}, IntegerLattice::standard(2)).group.order() >= 1);
    CHECK_THROWS_AS(component_group(a2, {x}, IntegerLattice({{3, 0}, {0, 3}}, 2)), InputError);
    CHECK_THROWS_AS(component_group(a2, {x}, IntegerLattice({{1, 0}}, 2)), InputError);
  }
}
