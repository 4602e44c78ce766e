#pragma once

// Hot loops of the workbench. The default entry points run OpenMP-parallel
// over independent outputs (arrows of a product, units of a reduced norm);
// the serial namespace holds the reference versions they are tested against.

#include <span>
#include <vector>

#include "groupoidal/element.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/linalg.hpp"

namespace groupoidal::kernels {

/// Caps the OpenMP team size; 0 restores the runtime default.
void set_thread_cap(int threads);
/// Applies GROUPOIDAL_THREADS if set (0 = auto) and returns the cap in force.
int configure_threads_from_env();
int max_threads();

/// (f * g)(gamma) = sum over eta in G^{r(gamma)} of f(eta) g(eta^-1 gamma) w(eta).
std::vector<Complex> convolve(std::span<const Complex> f, std::span<const Complex> g,
                              const FiniteGroupoid& grp, const HaarSystem& w);

/// Matrix of xi -> f * xi on L^2(G_u, lambda_u), in the basis e_gamma / sqrt(w(gamma^-1))
/// indexed by the s-fiber over u in canonical order.
Matrix regular_matrix(const FiniteGroupoid& grp, const HaarSystem& w, Index u, std::span<const Complex> f);

/// Operator norm of the regular representation at every unit.
std::vector<double> unit_norms(const FiniteGroupoid& grp, const HaarSystem& w, std::span<const Complex> f);

namespace serial {

std::vector<Complex> convolve(std::span<const Complex> f, std::span<const Complex> g,
                              const FiniteGroupoid& grp, const HaarSystem& w);
std::vector<double> unit_norms(const FiniteGroupoid& grp, const HaarSystem& w, std::span<const Complex> f);

}  // namespace serial

}  // namespace groupoidal::kernels
