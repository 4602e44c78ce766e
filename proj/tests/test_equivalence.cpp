#include <gtest/gtest.h>

#include "groupoidal/equivalence.hpp"
#include "groupoidal/errors.hpp"
#include "groupoidal/fixtures.hpp"
#include "support.hpp"

using namespace groupoidal;
namespace fx = groupoidal::fixtures;

namespace {

Bispace rebuild(const Equivalence& e, const BispaceTables& t) {
  return Bispace::from_tables(e.space.left().groupoid_ptr(), e.space.right().groupoid_ptr(), t);
}

std::vector<double> masses(const FiberMeasure& m) { return m.weights; }

/// Z/2 fixing a single point: not free, so brackets are ambiguous.
Bispace collapsed_space() {
  auto g = std::make_shared<const FiniteGroupoid>(fx::cyclic_group(2));
  auto h = std::make_shared<const FiniteGroupoid>(fx::trivial_group());
  BispaceTables t;
  t.points = {"p"};
  t.r = {{"p", "e"}};
  t.s = {{"p", "*"}};
  t.left_action = {{"g0", "p", "p"}, {"g1", "p", "p"}};
  t.right_action = {{"p", "id_*", "p"}};
  return Bispace::from_tables(g, h, t);
}

}  // namespace

TEST(Equivalence, PairOverTrivialIsValid) {
  const Equivalence d = fx::fix_d();
  EXPECT_TRUE(validate_equivalence(d.space).ok());
  EXPECT_TRUE(validate_equivalence(d).ok());
}

TEST(Equivalence, GroupActingOnItselfIsValid) { EXPECT_TRUE(validate_equivalence(fx::fix_f()).ok()); }

TEST(Equivalence, FixedPointBreaksFreenessAndTransitivity) {
  const Equivalence d = fx::fix_d();
  BispaceTables t = d.space.to_tables();
  for (auto& row : t.left_action) {
    if (row[0] == "(1,2)" && row[1] == "z2") row[2] = "z2";
  }
  const ValidationReport r = validate_equivalence(rebuild(d, t));
  EXPECT_TRUE(r.has("freeness"));
  EXPECT_TRUE(r.has("transitivity") || r.has("anchor"));
}

TEST(Equivalence, MissingActionIsADefinednessViolation) {
  const Equivalence d = fx::fix_d();
  BispaceTables t = d.space.to_tables();
  t.left_action.pop_back();
  EXPECT_TRUE(validate_equivalence(rebuild(d, t)).has("definedness"));
}

TEST(Equivalence, PropernessIsRecordedAsVacuous) {
  const ValidationReport r = validate_equivalence(fx::fix_d().space);
  bool noted = false;
  for (const auto& n : r.notes()) noted |= n.find("proper: trivially true (finite)") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Brackets, Examples) {
  const Equivalence d = fx::fix_d();
  const Equivalence f = fx::fix_f();
  EXPECT_EQ(g_bracket(d.space, "z1", "z2"), "(1,2)");
  EXPECT_EQ(g_bracket(d.space, "z1", "z1"), "(1,1)");
  EXPECT_EQ(g_bracket(f.space, "g1", "g0"), "g1");
  EXPECT_EQ(h_bracket(d.space, "z1", "z1"), "id_*");
  EXPECT_EQ(h_bracket(f.space, "g0", "g1"), "g1");
}

TEST(Brackets, DistinctFibersAreAPreconditionError) {
  EXPECT_THROW(h_bracket(fx::fix_d().space, "z1", "z2"), BracketError);
}

TEST(Brackets, AmbiguityIsABrokenEquivalence) {
  const Bispace z = collapsed_space();
  EXPECT_TRUE(validate_equivalence(z).has("freeness"));
  EXPECT_THROW(g_bracket(z, "p", "p"), BrokenEquivalenceError);
}

TEST(Opposite, SwapsAnchors) {
  const Bispace op = opposite_space(fx::fix_d().space);
  EXPECT_EQ(op.point_ids(), (std::vector<std::string>{"~z1", "~z2"}));
  const Index z1 = op.point_index("~z1");
  EXPECT_EQ(op.left_groupoid().unit_id(op.r(z1)), "*");
  EXPECT_EQ(op.right_groupoid().unit_id(op.s(z1)), "1");
  EXPECT_EQ(op.right_groupoid().unit_id(op.s(op.point_index("~z2"))), "2");
  EXPECT_EQ(op.point_carrier(), Carrier::Zop);
  EXPECT_TRUE(validate_equivalence(op).ok());
}

TEST(Opposite, UnitActsTrivially) {
  const Bispace op = opposite_space(fx::fix_d().space);
  const Index z1 = op.point_index("~z1");
  EXPECT_EQ(op.act_left(op.left_groupoid().arrow_index("id_*"), z1), z1);
}

TEST(Opposite, ActionsAreConjugated) {
  const Equivalence d = fx::fix_d();
  const Bispace op = opposite_space(d.space);
  // ~z1 . gamma = (gamma^-1 . z1)~ ; gamma = (1,2) gives (2,1) . z1 = z2
  EXPECT_EQ(op.point_id(op.act_right(op.point_index("~z1"), d.g().arrow_index("(1,2)"))), "~z2");
}

TEST(Opposite, IsAnInvolution) {
  for (const auto& c : support::equivalence_cases()) {
    SCOPED_TRACE(c.name);
    const BispaceTables once = c.e.space.to_tables();
    const BispaceTables twice = opposite_space(opposite_space(c.e.space)).to_tables();
    EXPECT_EQ(once.points, twice.points);
    EXPECT_EQ(once.r, twice.r);
    EXPECT_EQ(once.s, twice.s);
    EXPECT_EQ(once.left_action, twice.left_action);
    EXPECT_EQ(once.right_action, twice.right_action);
  }
}

TEST(Measures, Sigma) {
  const Equivalence d = fx::fix_d();
  EXPECT_EQ(masses(sigma_measure(d.space, d.right_haar, d.g().unit_index("1"))), (std::vector<double>{1, 0}));
  const Equivalence f = fx::fix_f();
  EXPECT_EQ(masses(sigma_measure(f.space, f.right_haar, 0)), (std::vector<double>{1, 1}));
  EXPECT_EQ(masses(sigma_measure(f.space, HaarSystem{{2.0, 2.0}}, 0)), (std::vector<double>{2, 2}));
}

TEST(Measures, Rho) {
  const Equivalence d = fx::fix_d();
  EXPECT_EQ(masses(rho_measure(d.space.left(), d.left_haar, d.space.point_index("z1"))), (std::vector<double>{1, 1}));
  auto b = std::make_shared<const FiniteGroupoid>(fx::fix_b());
  const GSpace self = self_space(b);
  EXPECT_EQ(masses(rho_measure(self, HaarSystem::counting(*b), self.point_index("g0"))), (std::vector<double>{1, 1}));
  EXPECT_EQ(masses(rho_measure(self, HaarSystem{{3.0, 3.0}}, self.point_index("g0"))), (std::vector<double>{3, 3}));
  EXPECT_THROW(rho_measure(d.space.right(), d.right_haar, 0), std::invalid_argument);
}

TEST(Measures, RhoMu) {
  const Equivalence d = fx::fix_d();
  const std::vector<double> point{1.0};
  EXPECT_TRUE(measures_equal(rho_mu_measure(d.space.left(), d.left_haar, point),
                             rho_measure(d.space.left(), d.left_haar, 0)));
  const std::vector<double> zero{0.0};
  EXPECT_EQ(masses(rho_mu_measure(d.space.left(), d.left_haar, zero)), (std::vector<double>{0, 0}));
  auto b = std::make_shared<const FiniteGroupoid>(fx::fix_b());
  const std::vector<double> two{2.0};
  EXPECT_EQ(masses(rho_mu_measure(self_space(b), HaarSystem::counting(*b), two)), (std::vector<double>{2, 2}));
  const std::vector<double> negative{-1.0};
  EXPECT_THROW(rho_mu_measure(d.space.left(), d.left_haar, negative), std::invalid_argument);
}

TEST(Measures, MassComparison) {
  EXPECT_TRUE(masses_equal(2.0, 2.0));
  EXPECT_FALSE(masses_equal(2.0, 3.0));
  EXPECT_TRUE(masses_equal(0.1 + 0.2, 0.3));
  EXPECT_FALSE(masses_equal(0.3, 0.3000001));
}

// Properties across the families.

TEST(EquivalenceProperties, EveryFamilyMemberValidates) {
  for (const auto& c : support::equivalence_cases()) {
    SCOPED_TRACE(c.name);
    const ValidationReport r = validate_equivalence(c.e);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.violations().front().detail);
  }
}

TEST(EquivalenceProperties, BracketIdentities) {
  for (const auto& c : support::equivalence_cases()) {
    SCOPED_TRACE(c.name);
    const Bispace& z = c.e.space;
    for (Index p = 0; p < z.point_count(); ++p) {
      for (Index gamma : c.e.g().s_fiber(z.r(p))) {
        EXPECT_EQ(g_bracket(z, z.act_left(gamma, p), p), gamma);
      }
      for (Index q = 0; q < z.point_count(); ++q) {
        if (z.s(p) == z.s(q)) EXPECT_EQ(z.act_left(g_bracket(z, p, q), q), p);
        if (z.r(p) == z.r(q)) EXPECT_EQ(z.act_right(p, h_bracket(z, p, q)), q);
      }
    }
  }
}

TEST(EquivalenceProperties, OrbitSpacesMatchUnitSpaces) {
  for (const auto& c : support::equivalence_cases()) {
    SCOPED_TRACE(c.name);
    // G\Z has one orbit per unit of H, Z/H one per unit of G
    EXPECT_EQ(orbits(c.e.space.left()).size(), c.e.h().unit_count());
    EXPECT_EQ(orbits(c.e.space.right()).size(), c.e.g().unit_count());
  }
}

TEST(EquivalenceProperties, MeasuresAreRepresentativeIndependent) {
  for (const auto& c : support::equivalence_cases()) {
    SCOPED_TRACE(c.name);
    for (Index u = 0; u < c.e.g().unit_count(); ++u) EXPECT_NO_THROW(sigma_measure(c.e.space, c.e.right_haar, u));
    for (Index p = 0; p < c.e.space.point_count(); ++p) {
      const FiberMeasure m = rho_measure(c.e.space.left(), c.e.left_haar, p);
      for (Index q = 0; q < c.e.space.point_count(); ++q) {
        if (m[q] > 0.0) EXPECT_TRUE(measures_equal(m, rho_measure(c.e.space.left(), c.e.left_haar, q)));
      }
    }
  }
}

TEST(EquivalenceProperties, RandomFamilyMembers) {
  ElementSampler rng(0xC0FFEE);
  for (int i = 0; i < 25; ++i) {
    const auto c = support::random_equivalence(rng);
    SCOPED_TRACE(c.name);
    EXPECT_TRUE(validate_equivalence(c.e).ok());
    EXPECT_TRUE(validate_equivalence(opposite(c.e)).ok());
  }
}
