#include "groupoidal/representations.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "groupoidal/errors.hpp"
#include "groupoidal/kernels.hpp"

namespace groupoidal {

namespace {

void require_on(const AlgebraElement& f, const FiniteGroupoid& g, const char* what) {
  if (f.size() != g.arrow_count()) {
    throw CarrierMismatch(std::string(what) + ": element has " + std::to_string(f.size()) + " values for " +
                          std::to_string(g.arrow_count()) + " arrows");
  }
}

}  // namespace

RepMatrix ind_delta(const FiniteGroupoid& g, const HaarSystem& w, Index u, const AlgebraElement& f) {
  require_on(f, g, "ind_delta");
  if (u >= g.unit_count()) throw std::out_of_range("ind_delta: unit index out of range");
  RepMatrix rep;
  for (Index a : g.s_fiber(u)) {
    rep.basis.push_back(g.arrow_id(a));
    rep.masses.push_back(w[g.inverse(a)]);
  }
  rep.entries = kernels::regular_matrix(g, w, u, f.values());
  return rep;
}

RepMatrix ind_delta(const FiniteGroupoid& g, const HaarSystem& w, std::string_view unit, const AlgebraElement& f) {
  return ind_delta(g, w, g.unit_index(unit), f);
}

double operator_norm(const Matrix& m) { return largest_singular_value(m); }
double operator_norm(const RepMatrix& m) { return largest_singular_value(m.entries); }

std::vector<double> unit_norms(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w) {
  require_on(f, g, "reduced_norm");
  return kernels::unit_norms(g, w, f.values());
}

double reduced_norm(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w) {
  const auto norms = unit_norms(f, g, w);
  return norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
}

RepMatrix ind_mu(const FiniteGroupoid& g, const HaarSystem& w, std::span<const double> mu, const AlgebraElement& f) {
  require_on(f, g, "ind_mu");
  if (mu.size() != g.unit_count()) throw std::invalid_argument("ind_mu: one mass per unit required");
  RepMatrix rep;
  std::vector<Matrix> blocks;
  for (Index u = 0; u < g.unit_count(); ++u) {
    if (mu[u] < 0.0) throw std::invalid_argument("ind_mu: negative mass");
    if (mu[u] == 0.0) continue;
    for (Index a : g.s_fiber(u)) {
      rep.basis.push_back(g.arrow_id(a));
      rep.masses.push_back(mu[u] * w[g.inverse(a)]);
    }
    blocks.push_back(kernels::regular_matrix(g, w, u, f.values()));
  }
  rep.entries = Matrix(rep.basis.size(), rep.basis.size());
  std::size_t offset = 0;
  for (const Matrix& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) rep.entries(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return rep;
}

RepMatrix r_mu_rep(const GSpace& x, const HaarSystem& w, std::span<const double> mu, const AlgebraElement& f) {
  const FiniteGroupoid& g = x.groupoid();
  require_on(f, g, "r_mu_rep");
  if (x.side() != Side::left) throw std::invalid_argument("r_mu_rep: needs a left G-space");
  if (validate_gspace(x).has("freeness")) throw std::invalid_argument("r_mu_rep: action is not free");
  const auto all = orbits(x);
  if (mu.size() != all.size()) throw std::invalid_argument("r_mu_rep: one mass per orbit required");

  const FiberMeasure rho = rho_mu_measure(x, w, mu);
  std::vector<Index> basis;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mu[i] == 0.0) continue;
    basis.insert(basis.end(), all[i].points.begin(), all[i].points.end());
  }
  std::vector<Index> position(x.point_count(), npos);
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = i;

  RepMatrix rep;
  rep.entries = Matrix(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Index p = basis[i];
    rep.basis.push_back(x.point_id(p));
    rep.masses.push_back(rho[p]);
    // (R(f) xi)(p) = sum over gamma in G^{r(p)} of f(gamma) xi(gamma^-1 . p) w(gamma)
    for (Index gamma : g.r_fiber(x.anchor(p))) {
      const Index q = x.act(g.inverse(gamma), p);
      const std::size_t j = position[q];
      rep.entries(i, j) += std::sqrt(rho[p] / rho[q]) * f[gamma] * w[gamma];
    }
  }
  return rep;
}

std::size_t reduced_kernel_dimension(const FiniteGroupoid& g, const HaarSystem& w) {
  std::vector<std::vector<Complex>> images;
  images.reserve(g.arrow_count());
  for (Index a = 0; a < g.arrow_count(); ++a) {
    const AlgebraElement delta = AlgebraElement::delta(Carrier::G, g.arrow_count(), a);
    std::vector<Complex> stacked;
    for (Index u = 0; u < g.unit_count(); ++u) {
      const Matrix m = kernels::regular_matrix(g, w, u, delta.values());
      stacked.insert(stacked.end(), m.data().begin(), m.data().end());
    }
    images.push_back(std::move(stacked));
  }
  return g.arrow_count() - span_rank(images, 1e-9);
}

bool BoundReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

BoundReport check_i_norm_bound(const FiniteGroupoid& g, const HaarSystem& w, const AlgebraElement& f,
                               std::span<const RegisteredSpace> extra) {
  BoundReport report;
  report.i_norm = i_norm(f, g, w);
  report.reduced_norm = reduced_norm(f, g, w);
  const double bound = report.i_norm + kINormSlack;
  report.checks.push_back({"reduced norm", report.reduced_norm, report.i_norm, report.reduced_norm <= bound});

  const GSpace self = self_space(std::make_shared<const FiniteGroupoid>(g));
  const std::vector<double> counting(orbits(self).size(), 1.0);
  const double self_norm = operator_norm(r_mu_rep(self, w, counting, f));
  report.checks.push_back({"R^G (G acting on itself)", self_norm, report.i_norm, self_norm <= bound});

  for (const RegisteredSpace& s : extra) {
    const double n = operator_norm(r_mu_rep(s.space, w, s.mu, f));
    report.checks.push_back({"R^X (" + s.name + ")", n, report.i_norm, n <= bound});
  }
  return report;
}

}  // namespace groupoidal
