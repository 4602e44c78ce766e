#include <gtest/gtest.h>

#include "groupoidal/algebra.hpp"
#include "groupoidal/fixtures.hpp"
#include "groupoidal/representations.hpp"
#include "support.hpp"

using namespace groupoidal;
namespace fx = groupoidal::fixtures;

namespace {

double entry(const RepMatrix& m, const std::string& row, const std::string& col) {
  const auto i = std::find(m.basis.begin(), m.basis.end(), row) - m.basis.begin();
  const auto j = std::find(m.basis.begin(), m.basis.end(), col) - m.basis.begin();
  return std::abs(m.entries(i, j));
}

AlgebraElement integral_element(ElementSampler& rng, std::size_t n) {
  AlgebraElement f(Carrier::G, n);
  for (std::size_t i = 0; i < n; ++i) f[i] = Complex(std::round(3 * rng.uniform()), std::round(3 * rng.uniform()));
  return f;
}

}  // namespace

TEST(IndDelta, PairGroupoidExample) {
  const FiniteGroupoid a = fx::fix_a();
  const RepMatrix m = ind_delta(a, HaarSystem::counting(a), "1", AlgebraElement::delta(Carrier::G, 4, a.arrow_index("(1,2)")));
  EXPECT_EQ(m.basis, (std::vector<std::string>{"(1,1)", "(2,1)"}));
  EXPECT_EQ(entry(m, "(1,1)", "(2,1)"), 1.0);
  EXPECT_EQ(entry(m, "(1,1)", "(1,1)") + entry(m, "(2,1)", "(1,1)") + entry(m, "(2,1)", "(2,1)"), 0.0);
  EXPECT_THROW(ind_delta(a, HaarSystem::counting(a), "3", AlgebraElement(Carrier::G, 4)), std::out_of_range);
}

TEST(IndDelta, CyclicGroupExample) {
  const FiniteGroupoid b = fx::fix_b();
  const RepMatrix m = ind_delta(b, HaarSystem::counting(b), "e", AlgebraElement::delta(Carrier::G, 2, b.arrow_index("g1")));
  ASSERT_EQ(m.entries.rows(), 2u);
  EXPECT_EQ(m.entries(0, 0), 0.0);
  EXPECT_EQ(m.entries(0, 1), 1.0);
  EXPECT_EQ(m.entries(1, 0), 1.0);
  EXPECT_EQ(m.entries(1, 1), 0.0);
}

TEST(IndDelta, OrthonormalizedBasisIsUnitaryUnderTranslation) {
  // with weights c_j = w((i,j)), delta_(1,2)/sqrt-ish scaling must still give a partial isometry
  const FiniteGroupoid a = fx::fix_a();
  const HaarSystem w = fx::fix_e_haar(a);
  const auto f = AlgebraElement::delta(Carrier::G, 4, a.arrow_index("(1,2)"), 1.0 / std::sqrt(w[a.arrow_index("(1,2)")]));
  EXPECT_NEAR(reduced_norm(f, a, w), 1.0, 1e-12);
}

TEST(ReducedNorm, Examples) {
  const FiniteGroupoid b = fx::fix_b();
  const HaarSystem wb = HaarSystem::counting(b);
  EXPECT_NEAR(reduced_norm(AlgebraElement(Carrier::G, std::vector<Complex>{1.0, 1.0}), b, wb), 2.0, 1e-12);
  EXPECT_NEAR(reduced_norm(AlgebraElement(Carrier::G, std::vector<Complex>{1.0, -1.0}), b, wb), 2.0, 1e-12);
  EXPECT_NEAR(reduced_norm(AlgebraElement(Carrier::G, std::vector<Complex>{1.0, Complex(0, 1)}), b, wb), std::sqrt(2.0),
              1e-12);
  const FiniteGroupoid a = fx::fix_a();
  const std::vector<double> norms = unit_norms(AlgebraElement::delta(Carrier::G, 4, a.arrow_index("(1,1)")), a,
                                               HaarSystem::counting(a));
  EXPECT_EQ(norms.size(), 2u);
  EXPECT_NEAR(norms[0], 1.0, 1e-12);
  EXPECT_NEAR(norms[1], 1.0, 1e-12);
  EXPECT_EQ(reduced_norm(AlgebraElement(Carrier::G, 4), a, HaarSystem::counting(a)), 0.0);
}

TEST(IndMu, DirectSumOverCharges) {
  const FiniteGroupoid a = fx::fix_a();
  const HaarSystem w = HaarSystem::counting(a);
  const auto f = AlgebraElement::delta(Carrier::G, 4, a.arrow_index("(1,2)"));
  const std::vector<double> both{1.0, 1.0}, first{1.0, 0.0};
  EXPECT_EQ(ind_mu(a, w, both, f).entries.rows(), 4u);
  EXPECT_EQ(ind_mu(a, w, first, f).entries.rows(), 2u);
  EXPECT_NEAR(operator_norm(ind_mu(a, w, both, f)), reduced_norm(f, a, w), 1e-12);
}

TEST(RMu, LeftSpaceOfPairOverTrivial) {
  const Equivalence d = fx::fix_d();
  const std::vector<double> mu{1.0};
  const RepMatrix m = r_mu_rep(d.space.left(), d.left_haar, mu, AlgebraElement::delta(Carrier::G, 4, d.g().arrow_index("(1,2)")));
  EXPECT_EQ(m.basis, (std::vector<std::string>{"z1", "z2"}));
  EXPECT_EQ(m.masses, (std::vector<double>{1.0, 1.0}));
  EXPECT_EQ(entry(m, "z1", "z2"), 1.0);
  EXPECT_EQ(entry(m, "z2", "z1"), 0.0);
  const std::vector<double> none{0.0};
  EXPECT_EQ(r_mu_rep(d.space.left(), d.left_haar, none, AlgebraElement(Carrier::G, 4)).basis.size(), 0u);
}

TEST(Kernel, FiniteRegularRepresentationsAreFaithful) {
  const FiniteGroupoid a = fx::fix_a(), b = fx::fix_b();
  EXPECT_EQ(reduced_kernel_dimension(a, HaarSystem::counting(a)), 0u);
  EXPECT_EQ(reduced_kernel_dimension(b, HaarSystem::counting(b)), 0u);
  const FiniteGroupoid ab = fx::disjoint_union(a, b);
  EXPECT_EQ(reduced_kernel_dimension(ab, HaarSystem::counting(ab)), 0u);
  EXPECT_EQ(reduced_kernel_dimension(a, fx::fix_e_haar(a)), 0u);
}

TEST(INormBound, Examples) {
  const FiniteGroupoid a = fx::fix_a();
  const HaarSystem w = HaarSystem::counting(a);
  AlgebraElement ones(Carrier::G, std::vector<Complex>(4, 1.0));
  const BoundReport r = check_i_norm_bound(a, w, ones);
  EXPECT_TRUE(r.ok());
  EXPECT_DOUBLE_EQ(r.i_norm, 2.0);
  EXPECT_NEAR(r.reduced_norm, 2.0, 1e-12);

  const Equivalence d = fx::fix_d();
  const std::vector<RegisteredSpace> extra{{"Z", d.space.left(), {2.0}}};
  const BoundReport with = check_i_norm_bound(a, w, ones, extra);
  EXPECT_TRUE(with.ok());
  EXPECT_GT(with.checks.size(), r.checks.size());
}

// Oracle comparisons.

TEST(RepresentationProperties, CyclicNormsMatchTheDft) {
  ElementSampler rng(0xD1F7);
  for (int n : {1, 2, 3, 4, 5, 8, 12}) {
    const FiniteGroupoid zn = fx::cyclic_group(n);
    const HaarSystem w = HaarSystem::counting(zn);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement f = support::element_on(rng, zn);
      const double ref = support::dft_norm(zn, f);
      EXPECT_NEAR(reduced_norm(f, zn, w), ref, 1e-9 * std::max(1.0, ref)) << "n=" << n;
    }
  }
}

TEST(RepresentationProperties, PairNormsMatchPowerIteration) {
  ElementSampler rng(0x9A1);
  for (int n = 1; n <= 5; ++n) {
    const FiniteGroupoid p = fx::pair_groupoid(n);
    const HaarSystem w = HaarSystem::counting(p);
    for (int i = 0; i < 10; ++i) {
      const AlgebraElement f = support::element_on(rng, p);
      const double ref = support::power_norm(support::pair_matrix(p, f));
      EXPECT_NEAR(reduced_norm(f, p, w), ref, 1e-9 * std::max(1.0, ref)) << "n=" << n;
    }
  }
}

TEST(RepresentationProperties, StarHomomorphism) {
  ElementSampler rng(0x57A);
  for (const auto& c : support::groupoid_cases()) {
    SCOPED_TRACE(c.name);
    const AlgebraElement f = support::element_on(rng, c.g), g = support::element_on(rng, c.g);
    for (Index u = 0; u < c.g.unit_count(); ++u) {
      const Matrix pf = ind_delta(c.g, c.w, u, f).entries, pg = ind_delta(c.g, c.w, u, g).entries;
      const double scale = std::max(1.0, reduced_norm(f, c.g, c.w) * reduced_norm(g, c.g, c.w));
      EXPECT_LE(max_abs_diff(ind_delta(c.g, c.w, u, convolve(f, g, c.g, c.w)).entries, pf * pg), 1e-12 * scale);
      EXPECT_LE(max_abs_diff(ind_delta(c.g, c.w, u, involution(f, c.g)).entries, adjoint(pf)), 1e-12);
    }
  }
}

TEST(RepresentationProperties, INormDominatesEveryRepresentation) {
  ElementSampler rng(0x1B);
  for (const auto& c : support::groupoid_cases()) {
    SCOPED_TRACE(c.name);
    for (int i = 0; i < 10; ++i) {
      const BoundReport r = check_i_norm_bound(c.g, c.w, support::element_on(rng, c.g));
      EXPECT_TRUE(r.ok());
      EXPECT_LE(r.reduced_norm, r.i_norm + kINormSlack);
    }
  }
}

TEST(RepresentationProperties, SelfSpaceRepresentationHasTheReducedNorm) {
  ElementSampler rng(0x5E1F);
  for (const auto& c : support::groupoid_cases()) {
    SCOPED_TRACE(c.name);
    auto g = std::make_shared<const FiniteGroupoid>(c.g);
    const GSpace self = self_space(g);
    const std::vector<double> mu(orbits(self).size(), 1.0);
    const AlgebraElement f = support::element_on(rng, c.g);
    const double ref = reduced_norm(f, c.g, c.w);
    EXPECT_NEAR(operator_norm(r_mu_rep(self, c.w, mu, f)), ref, 1e-9 * std::max(1.0, ref));
  }
}

TEST(RepresentationProperties, IntegerElementsHaveNoKernel) {
  ElementSampler rng(0x4E);
  for (const auto& c : support::groupoid_cases()) {
    SCOPED_TRACE(c.name);
    EXPECT_EQ(reduced_kernel_dimension(c.g, c.w), 0u);
    const AlgebraElement f = integral_element(rng, c.g.arrow_count());
    if (!f.is_zero()) EXPECT_GT(reduced_norm(f, c.g, c.w), 0.0);
  }
}
