#include <gtest/gtest.h>

#include "groupoidal/kernels.hpp"
#include "support.hpp"

using namespace groupoidal;

namespace {

struct ThreadCapGuard {
  ~ThreadCapGuard() { kernels::set_thread_cap(0); }
};

}  // namespace

TEST(Kernels, ParallelConvolutionAgreesWithSerial) {
  ThreadCapGuard guard;
  ElementSampler rng(0xC0);
  std::vector<support::GroupoidCase> cases = support::groupoid_cases();
  const FiniteGroupoid big = fixtures::pair_groupoid(12);
  cases.push_back({"pair12", big, HaarSystem::counting(big)});
  for (int threads : {1, 2, 4}) {
    kernels::set_thread_cap(threads);
    for (const auto& c : cases) {
      SCOPED_TRACE(c.name);
      const AlgebraElement f = support::element_on(rng, c.g), g = support::element_on(rng, c.g);
      const auto par = kernels::convolve(f.values(), g.values(), c.g, c.w);
      const auto ser = kernels::serial::convolve(f.values(), g.values(), c.g, c.w);
      // each output is summed in the same order on either path
      EXPECT_EQ(par, ser);
    }
  }
}

TEST(Kernels, ParallelUnitNormsAgreeWithSerial) {
  ThreadCapGuard guard;
  ElementSampler rng(0xC1);
  for (int threads : {1, 3}) {
    kernels::set_thread_cap(threads);
    for (const auto& c : support::groupoid_cases()) {
      SCOPED_TRACE(c.name);
      const AlgebraElement f = support::element_on(rng, c.g);
      EXPECT_EQ(kernels::unit_norms(c.g, c.w, f.values()), kernels::serial::unit_norms(c.g, c.w, f.values()));
    }
  }
}

TEST(Kernels, ThreadCap) {
  ThreadCapGuard guard;
  kernels::set_thread_cap(1);
  EXPECT_EQ(kernels::max_threads(), 1);
  kernels::set_thread_cap(0);
  EXPECT_GE(kernels::max_threads(), 1);
}

TEST(Kernels, RegularMatrixIsSquareOverTheSourceFiber) {
  const FiniteGroupoid a = fixtures::fix_a();
  const std::vector<Complex> f(4, 1.0);
  const Matrix m = kernels::regular_matrix(a, HaarSystem::counting(a), a.unit_index("2"), f);
  EXPECT_EQ(m.rows(), a.s_fiber(a.unit_index("2")).size());
  EXPECT_EQ(m.cols(), m.rows());
}
