#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "groupoidal/kernels.hpp"

namespace groupoidal::kernels {

namespace {
int default_threads = 0;
}

void set_thread_cap(int threads) {
  if (default_threads == 0) default_threads = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : default_threads);
}

int configure_threads_from_env() {
  if (const char* env = std::getenv("GROUPOIDAL_THREADS")) {
    try {
      set_thread_cap(std::stoi(env));
    } catch (const std::exception&) {
      // unparseable values leave the runtime default in place
    }
  }
  return omp_get_max_threads();
}

int max_threads() { return omp_get_max_threads(); }

std::vector<Complex> convolve(std::span<const Complex> f, std::span<const Complex> g,
                              const FiniteGroupoid& grp, const HaarSystem& w) {
  const auto n = static_cast<std::ptrdiff_t>(grp.arrow_count());
  std::vector<Complex> out(grp.arrow_count());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto gamma = static_cast<Index>(i);
    Complex acc = 0.0;
    for (Index eta : grp.r_fiber(grp.range(gamma))) {
      acc += f[eta] * g[grp.compose(grp.inverse(eta), gamma)] * w[eta];
    }
    out[gamma] = acc;
  }
  return out;
}

std::vector<double> unit_norms(const FiniteGroupoid& grp, const HaarSystem& w, std::span<const Complex> f) {
  for (Complex v : f) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::domain_error("operator norm: non-finite entry");
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(grp.unit_count());
  std::vector<double> norms(grp.unit_count());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    norms[u] = largest_singular_value(regular_matrix(grp, w, static_cast<Index>(u), f));
  }
  return norms;
}

}  // namespace groupoidal::kernels
