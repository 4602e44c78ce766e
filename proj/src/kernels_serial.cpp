#include "groupoidal/kernels.hpp"

#include <cmath>

namespace groupoidal::kernels {

Matrix regular_matrix(const FiniteGroupoid& grp, const HaarSystem& w, Index u, std::span<const Complex> f) {
  const auto fiber = grp.s_fiber(u);
  Matrix m(fiber.size(), fiber.size());
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const Index gamma = fiber[i];
    const double mass_gamma = w[grp.inverse(gamma)];
    for (std::size_t j = 0; j < fiber.size(); ++j) {
      const Index beta = fiber[j];
      // Only eta = gamma beta^-1 carries e_beta into the gamma coordinate.
      const Index eta = grp.compose(gamma, grp.inverse(beta));
      if (f[eta] == 0.0) continue;
      const double mass_beta = w[grp.inverse(beta)];
      m(i, j) = std::sqrt(mass_gamma / mass_beta) * f[eta] * w[eta];
    }
  }
  return m;
}

namespace serial {

std::vector<Complex> convolve(std::span<const Complex> f, std::span<const Complex> g,
                              const FiniteGroupoid& grp, const HaarSystem& w) {
  std::vector<Complex> out(grp.arrow_count());
  for (Index gamma = 0; gamma < grp.arrow_count(); ++gamma) {
    Complex acc = 0.0;
    for (Index eta : grp.r_fiber(grp.range(gamma))) {
      acc += f[eta] * g[grp.compose(grp.inverse(eta), gamma)] * w[eta];
    }
    out[gamma] = acc;
  }
  return out;
}

std::vector<double> unit_norms(const FiniteGroupoid& grp, const HaarSystem& w, std::span<const Complex> f) {
  std::vector<double> norms(grp.unit_count());
  for (Index u = 0; u < grp.unit_count(); ++u) norms[u] = largest_singular_value(regular_matrix(grp, w, u, f));
  return norms;
}

}  // namespace serial

}  // namespace groupoidal::kernels
