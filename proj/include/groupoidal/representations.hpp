#pragma once

#include <span>
#include <string>
#include <vector>

#include "groupoidal/element.hpp"
#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/linalg.hpp"

namespace groupoidal {

/// A representation operator on a weighted l^2 space. Basis vectors are
/// orthonormalized (divided by the square root of their mass), so the
/// adjoint of the operator is the conjugate transpose of `entries`.
struct RepMatrix {
  std::vector<std::string> basis;
  std::vector<double> masses;
  Matrix entries;
};

/// Ind delta_u(f): left convolution by f on L^2(G_u, lambda_u).
/// Throws std::out_of_range for an unknown unit.
RepMatrix ind_delta(const FiniteGroupoid& g, const HaarSystem& w, Index u, const AlgebraElement& f);
RepMatrix ind_delta(const FiniteGroupoid& g, const HaarSystem& w, std::string_view unit, const AlgebraElement& f);

double operator_norm(const Matrix& m);
double operator_norm(const RepMatrix& m);

/// sup over units of ||Ind delta_u(f)||.
double reduced_norm(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w);
/// ||Ind delta_u(f)|| for every unit, in unit order.
std::vector<double> unit_norms(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w);

/// Ind mu for an atomic measure mu on the units (one mass per unit): the
/// direct sum of Ind delta_u over units with mu(u) > 0, unit-major.
RepMatrix ind_mu(const FiniteGroupoid& g, const HaarSystem& w, std::span<const double> mu, const AlgebraElement& f);

/// R^X_mu(f) on l^2(X, rho_mu) for a free left G-space X and an atomic measure
/// mu on G\X (one mass per orbit, indexed like orbits(x)). Orbits with zero
/// mass drop out of the basis; the rest appear orbit-major.
RepMatrix r_mu_rep(const GSpace& x, const HaarSystem& w, std::span<const double> mu, const AlgebraElement& f);

/// dim of the intersection of the kernels of Ind delta_u over all units,
/// inside the |G|-dimensional space of functions on arrows.
std::size_t reduced_kernel_dimension(const FiniteGroupoid& g, const HaarSystem& w);

/// A G-space and orbit measure to test the I-norm bound against.
struct RegisteredSpace {
  std::string name;
  GSpace space;
  std::vector<double> mu;
};

struct BoundCheck {
  std::string what;
  double norm = 0.0;
  double bound = 0.0;
  bool ok = false;
};

struct BoundReport {
  double i_norm = 0.0;
  double reduced_norm = 0.0;
  std::vector<BoundCheck> checks;

  bool ok() const;
};

inline constexpr double kINormSlack = 1e-10;

/// ||f||_r <= ||f||_I and ||R^X_mu(f)|| <= ||f||_I for G acting on itself
/// (counting orbit measure) and every extra registered space.
BoundReport check_i_norm_bound(const FiniteGroupoid& g, const HaarSystem& w, const AlgebraElement& f,
                               std::span<const RegisteredSpace> extra = {});

}  // namespace groupoidal
