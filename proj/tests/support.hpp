#pragma once

// Independent oracles and deterministic case generators shared by the tests.
// The oracles avoid the library's kernels on purpose: convolution is summed
// over composable pairs, norms come from the DFT or power iteration.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "groupoidal/equivalence.hpp"
#include "groupoidal/fixtures.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/sampling.hpp"

namespace support {

using groupoidal::AlgebraElement;
using groupoidal::Complex;
using groupoidal::Equivalence;
using groupoidal::FiniteGroupoid;
using groupoidal::HaarSystem;
using groupoidal::Index;

/// Exponent j of the arrow "g<j>" of a cyclic group.
inline int cyclic_exponent(const std::string& id) { return std::stoi(id.substr(1)); }

/// max_k |sum_j f(g_j) e^{-2 pi i j k / n}|: the reduced norm on Z/n, read
/// off the characters.
inline double dft_norm(const FiniteGroupoid& zn, const AlgebraElement& f) {
  const int n = static_cast<int>(zn.arrow_count());
  double best = 0.0;
  for (int k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (Index a = 0; a < zn.arrow_count(); ++a) {
      const int j = cyclic_exponent(zn.arrow_id(a));
      acc += f[a] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
    }
    best = std::max(best, std::abs(acc));
  }
  return best;
}

/// (f * g)(eta zeta) accumulates f(eta) g(zeta) w(eta) over every composable pair.
inline AlgebraElement pair_sum_convolve(const AlgebraElement& f, const AlgebraElement& g, const FiniteGroupoid& grp,
                                        const HaarSystem& w) {
  AlgebraElement out(f.carrier(), grp.arrow_count());
  for (Index eta = 0; eta < grp.arrow_count(); ++eta) {
    for (Index zeta = 0; zeta < grp.arrow_count(); ++zeta) {
      if (grp.source(eta) != grp.range(zeta)) continue;
      out[grp.compose(eta, zeta)] += f[eta] * g[zeta] * w[eta];
    }
  }
  return out;
}

using Dense = std::vector<std::vector<Complex>>;

/// Largest singular value by power iteration on A^H A.
inline double power_norm(const Dense& a, int iterations = 2000) {
  if (a.empty() || a.front().empty()) return 0.0;
  const std::size_t rows = a.size(), cols = a.front().size();
  std::vector<Complex> v(cols);
  for (std::size_t j = 0; j < cols; ++j) v[j] = Complex(1.0 + 0.1 * j, 0.05 * j);
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Complex> av(rows, 0.0), w(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) av[i] += a[i][j] * v[j];
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) w[j] += std::conj(a[i][j]) * av[i];
    double norm = 0.0;
    for (Complex x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (std::size_t j = 0; j < cols; ++j) v[j] = w[j] / norm;
    sigma = std::sqrt(norm);
  }
  return sigma;
}

/// On the pair groupoid with counting measure, f is the matrix [f((i,j))].
inline Dense pair_matrix(const FiniteGroupoid& pair, const AlgebraElement& f) {
  const std::size_t n = pair.unit_count();
  Dense m(n, std::vector<Complex>(n));
  for (Index a = 0; a < pair.arrow_count(); ++a) {
    const std::string& id = pair.arrow_id(a);  // "(i,j)"
    const auto comma = id.find(',');
    const int i = std::stoi(id.substr(1, comma - 1));
    const int j = std::stoi(id.substr(comma + 1));
    m[i - 1][j - 1] = f[a];
  }
  return m;
}

struct GroupoidCase {
  std::string name;
  FiniteGroupoid g;
  HaarSystem w;
};

/// Groupoids of every shape the fixtures produce, counting and source-weighted.
inline std::vector<GroupoidCase> groupoid_cases(std::uint64_t seed = groupoidal::kDefaultSeed) {
  using namespace groupoidal::fixtures;
  groupoidal::ElementSampler rng(seed);
  std::vector<std::pair<std::string, FiniteGroupoid>> shapes;
  shapes.emplace_back("pair1", pair_groupoid(1));
  shapes.emplace_back("pair2", pair_groupoid(2));
  shapes.emplace_back("pair4", pair_groupoid(4));
  shapes.emplace_back("Z2", cyclic_group(2));
  shapes.emplace_back("Z5", cyclic_group(5));
  shapes.emplace_back("Z12", cyclic_group(12));
  shapes.emplace_back("trivial", trivial_group());
  shapes.emplace_back("transitive2x3", transitive_groupoid(2, 3));
  shapes.emplace_back("A+B", disjoint_union(fix_a(), fix_b()));
  shapes.emplace_back("pair3+Z3", disjoint_union(pair_groupoid(3), cyclic_group(3)));
  std::vector<GroupoidCase> out;
  for (auto& [name, g] : shapes) {
    out.push_back({name + "/counting", g, HaarSystem::counting(g)});
    std::vector<double> mass(g.unit_count());
    for (double& m : mass) m = rng.positive(0.25, 4.0);
    out.push_back({name + "/weighted", g, HaarSystem::from_source_weights(g, mass)});
  }
  return out;
}

struct EquivalenceCase {
  std::string name;
  Equivalence e;
};

/// Equivalences from every family, plus reweighted copies with random unit masses.
inline std::vector<EquivalenceCase> equivalence_cases(std::uint64_t seed = groupoidal::kDefaultSeed) {
  using namespace groupoidal::fixtures;
  groupoidal::ElementSampler rng(seed);
  std::vector<EquivalenceCase> base{
      {"FIX-D", fix_d()},
      {"FIX-F", fix_f()},
      {"pair3xtrivial", pair_trivial_equivalence(3)},
      {"pair2xZ2", pair_cyclic_equivalence(2, 2)},
      {"pair3xZ3", pair_cyclic_equivalence(3, 3)},
      {"pair1xZ4", pair_cyclic_equivalence(1, 4)},
      {"transitive2-3xZ2", transitive_equivalence(2, 3, 2)},
  };
  std::vector<EquivalenceCase> out = base;
  for (const auto& c : base) {
    std::vector<double> gm(c.e.g().unit_count()), hm(c.e.h().unit_count());
    for (double& m : gm) m = rng.positive(0.25, 4.0);
    for (double& m : hm) m = rng.positive(0.25, 4.0);
    out.push_back({c.name + "/weighted", reweighted(c.e, gm, hm)});
  }
  return out;
}

/// A random equivalence drawn from the families with small random parameters.
inline EquivalenceCase random_equivalence(groupoidal::ElementSampler& rng) {
  using namespace groupoidal::fixtures;
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(std::floor((rng.uniform() + 1.0) * 0.5 * (hi - lo + 1)));
  };
  const int family = pick(0, 2);
  const int n = pick(1, 3), m = pick(1, 3), p = pick(1, 3);
  EquivalenceCase c;
  switch (family) {
    case 0: c = {"pair" + std::to_string(n) + "xtrivial", pair_trivial_equivalence(n)}; break;
    case 1: c = {"pair" + std::to_string(n) + "xZ" + std::to_string(m), pair_cyclic_equivalence(n, m)}; break;
    default:
      c = {"transitive" + std::to_string(n) + "-" + std::to_string(p) + "xZ" + std::to_string(m),
           transitive_equivalence(n, p, m)};
  }
  if (pick(0, 1) == 1) {
    std::vector<double> gm(c.e.g().unit_count()), hm(c.e.h().unit_count());
    for (double& x : gm) x = rng.positive(0.25, 4.0);
    for (double& x : hm) x = rng.positive(0.25, 4.0);
    c.e = reweighted(c.e, gm, hm);
    c.name += "/weighted";
  }
  return c;
}

inline AlgebraElement element_on(groupoidal::ElementSampler& rng, const FiniteGroupoid& g,
                                 groupoidal::Carrier c = groupoidal::Carrier::G) {
  return rng.element(c, g.arrow_count());
}

/// Index of an arrow by id; fails loudly through at().
inline Index arrow(const FiniteGroupoid& g, const std::string& id) { return g.arrow_index(id); }

}  // namespace support
