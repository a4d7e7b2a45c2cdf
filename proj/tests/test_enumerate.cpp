#include "alcove/enumerate.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace alcove;

namespace {

std::set<std::string> labels(const std::vector<SubsystemDescriptor>& list) {
  std::set<std::string> out;
  for (const auto& sd : list) out.insert(sd.label());
  return out;
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("maximal-rank subsystems: spot values") {
    CHECK(labels(bds_maximal(RootSystem(SimpleType::parse("G2")))) == std::set<std::string>{"A2", "A1 x A1"});
    CHECK(labels(bds_maximal(RootSystem(SimpleType::parse("F4")))) ==
          std::set<std::string>{"B4", "A1 x C3", "A2 x A2"});
    CHECK(labels(bds_maximal(RootSystem(SimpleType::parse("A1")))) == std::set<std::string>{"A1"});
    CHECK(labels(bds_maximal(RootSystem(SimpleType::parse("E8")))) ==
          std::set<std::string>{"D8", "A8", "A4 x A4", "A2 x E6", "A1 x E7"});
    CHECK(labels(bds_maximal(RootSystem(SimpleType::parse("E7")))) ==
          std::set<std::string>{"A1 x D6", "A7", "A2 x A5"});
    for (const auto& t : all_types(8))
      for (const auto& sd : bds_maximal(RootSystem(t))) CHECK(sd.subsystem_rank == t.rank);
  }

  TEST_CASE("repeated deletion reaches every closed subsystem (rank <= 4)") {
    for (const auto& t : all_types(4)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      oracle::ClosedSubsets closed(rs);
      std::set<oracle::Signature> expected, got;
      for (auto s : closed.all()) expected.insert(oracle::signature(rs, closed.members(s)));
      auto all = bds_all(rs);
      for (const auto& e : all) got.insert(oracle::signature_of_positive(rs, e.subsystem.positive_roots));
      CHECK(got == expected);
      CHECK(all.front().parent == -1);
      for (std::size_t i = 1; i < all.size(); ++i) {
        REQUIRE(all[i].parent >= 0);
        CHECK(static_cast<std::size_t>(all[i].parent) < i);
        CHECK(all[i].depth == all[static_cast<std::size_t>(all[i].parent)].depth + 1);
      }
    }
  }

  TEST_CASE("centralizer types: spot values and realization") {
    auto a2 = centralizer_types(RootSystem(SimpleType::parse("A2")));
    REQUIRE(a2.size() == 3);
    CHECK(a2[0].descriptor.subsystem.label() == "A2");
    CHECK(a2[1].descriptor.subsystem.label() == "A1");
    CHECK(a2[1].descriptor.torus_rank == 1);
    CHECK(a2[2].descriptor.torus_rank == 2);
    CHECK(centralizer_types(RootSystem(SimpleType::parse("A1"))).size() == 2);
    std::set<std::string> g2;
    for (const auto& ct : centralizer_types(RootSystem(SimpleType::parse("G2")))) g2.insert(ct.descriptor.subsystem.label());
    CHECK(g2.count("A2") == 1);
    CHECK(g2.count("A1 x A1") == 1);
    for (const auto& t : all_types(6)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      for (const auto& ct : centralizer_types(rs)) {
        CHECK(rs.in_alcove(ct.point));
        CentralizerDescriptor cd = centralizer_tuple(rs, {ct.point});
        CHECK(cd.subsystem.factors == ct.descriptor.subsystem.factors);
        CHECK(cd.torus_rank == ct.descriptor.torus_rank);
      }
    }
  }

  TEST_CASE("chain bounds: spot values, witnesses and determinism") {
    auto m = [](const char* name) { return max_chain(RootSystem(SimpleType::parse(name))).m; };
    CHECK(m("A1") == 1);
    CHECK(m("A2") == 2);
    CHECK(m("G2") == 3);
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      ChainBound cb = max_chain(rs);
      ChainOptions rev;
      rev.reverse_order = true;
      CHECK(max_chain(rs, rev).m == cb.m);
      CHECK(chain_length({t}) == cb.m);
      REQUIRE(static_cast<int>(cb.witness.size()) == cb.m);
      // Each step strictly shrinks (subsystem rank, root count).
      std::pair<int, std::size_t> prev{rs.rank(), rs.positive_roots().size()};
      for (const auto& node : cb.witness) {
        std::pair<int, std::size_t> cur{node.descriptor.subsystem.subsystem_rank,
                                        node.descriptor.subsystem.positive_roots.size()};
        CHECK(cur < prev);
        prev = cur;
      }
      CHECK(cb.witness.back().descriptor.subsystem.subsystem_rank == 0);
    }
  }

  TEST_CASE("chain bounds are monotone and additive over factors") {
    for (const auto& t : all_types(6)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      const int mt = chain_length({t});
      for (const auto& ct : centralizer_types(rs)) {
        const auto& factors = ct.descriptor.subsystem.factors;
        if (factors.size() == 1 && factors[0].rank == t.rank && ct.descriptor.subsystem.positive_roots.size() ==
                                                                    rs.positive_roots().size())
          continue;
        for (const auto& f : factors) CHECK(chain_length({f}) < 1 + mt);
        CHECK(chain_length(factors) < mt);
      }
    }
    for (const auto& a : all_types(3))
      for (const auto& b : all_types(3)) CHECK(chain_length({a, b}) == chain_length({a}) + chain_length({b}));
  }

  TEST_CASE("component steps") {
    for (const auto& t : all_types(4)) {
      CAPTURE(t.name());
      RootSystem rs(t);
      ChainOptions opts;
      opts.include_component_steps = true;
      ChainBound cb = max_chain(rs, opts);
      REQUIRE(cb.m_with_components);
      CHECK(*cb.m_with_components >= cb.m_connected);
      CHECK(cb.m == std::max(cb.m_connected, *cb.m_with_components));
      CHECK(static_cast<int>(cb.witness.size()) == cb.m);
    }
  }

  TEST_CASE("vertex-restricted search reaches the same bound") {
    for (const auto& t : all_types(8)) {
      CAPTURE(t.name());
      CHECK(chain_length({t}, true) == chain_length({t}));
    }
  }
}
