#include "groupoidal/algebra.hpp"

#include <cmath>
#include <string>

#include "groupoidal/errors.hpp"
#include "groupoidal/detail/format.hpp"
#include "groupoidal/kernels.hpp"

namespace groupoidal {

namespace {

constexpr double kRepresentativeTolerance = 1e-12;
constexpr double kBlockTolerance = 1e-12;

void require(const AlgebraElement& x, Carrier c, std::size_t n, const char* what) {
  if (x.carrier() != c || x.size() != n) {
    throw CarrierMismatch(std::string(what) + ": expected an element on " + std::string(to_string(c)) + "[" +
                          std::to_string(n) + "], got " + std::string(to_string(x.carrier())) + "[" +
                          std::to_string(x.size()) + "]");
  }
}

bool close(Complex a, Complex b) {
  return std::abs(a - b) <= kRepresentativeTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g, const FiniteGroupoid& grp,
                        const HaarSystem& w) {
  if (f.carrier() != g.carrier() || f.size() != grp.arrow_count() || g.size() != grp.arrow_count() ||
      w.size() != grp.arrow_count()) {
    throw CarrierMismatch("convolve: operands must live on the same groupoid");
  }
  return AlgebraElement(f.carrier(), kernels::convolve(f.values(), g.values(), grp, w));
}

AlgebraElement involution(const AlgebraElement& f, const FiniteGroupoid& grp) {
  if (f.size() != grp.arrow_count()) throw CarrierMismatch("involution: element does not match the groupoid");
  AlgebraElement out(f.carrier(), f.size());
  for (Index a = 0; a < grp.arrow_count(); ++a) out[a] = std::conj(f[grp.inverse(a)]);
  return out;
}

AlgebraElement left_action(const Equivalence& e, const AlgebraElement& f, const AlgebraElement& phi) {
  const Bispace& z = e.space;
  const FiniteGroupoid& g = z.left_groupoid();
  require(f, z.left_carrier(), g.arrow_count(), "left_action");
  require(phi, z.point_carrier(), z.point_count(), "left_action");
  AlgebraElement out(z.point_carrier(), z.point_count());
  for (Index p = 0; p < z.point_count(); ++p) {
    Complex acc = 0.0;
    for (Index gamma : g.r_fiber(z.r(p))) {
      acc += f[gamma] * phi[z.act_left(g.inverse(gamma), p)] * e.left_haar[gamma];
    }
    out[p] = acc;
  }
  return out;
}

AlgebraElement right_action(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& b) {
  const Bispace& z = e.space;
  const FiniteGroupoid& h = z.right_groupoid();
  require(phi, z.point_carrier(), z.point_count(), "right_action");
  require(b, z.right_carrier(), h.arrow_count(), "right_action");
  AlgebraElement out(z.point_carrier(), z.point_count());
  for (Index p = 0; p < z.point_count(); ++p) {
    Complex acc = 0.0;
    for (Index eta : h.r_fiber(z.s(p))) {
      acc += phi[z.act_right(p, eta)] * b[h.inverse(eta)] * e.right_haar[eta];
    }
    out[p] = acc;
  }
  return out;
}

AlgebraElement rip(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& psi) {
  const Bispace& z = e.space;
  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  require(phi, z.point_carrier(), z.point_count(), "rip");
  require(psi, z.point_carrier(), z.point_count(), "rip");
  AlgebraElement out(z.right_carrier(), h.arrow_count());
  for (Index eta = 0; eta < h.arrow_count(); ++eta) {
    const auto base_points = z.right().anchor_fiber(h.range(eta));
    if (base_points.empty()) throw std::invalid_argument("rip: no point over r(" + h.arrow_id(eta) + ")");
    bool first = true;
    for (Index base : base_points) {
      Complex acc = 0.0;
      for (Index gamma : g.r_fiber(z.r(base))) {
        const Index moved = z.act_left(g.inverse(gamma), base);
        acc += std::conj(phi[moved]) * psi[z.act_right(moved, eta)] * e.left_haar[gamma];
      }
      if (first) {
        out[eta] = acc;
        first = false;
      } else if (!close(out[eta], acc)) {
        throw BrokenEquivalenceError("right inner product at " + h.arrow_id(eta) + " depends on the base point " +
                                     z.point_id(base));
      }
    }
  }
  return out;
}

AlgebraElement lip(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& psi) {
  const Bispace& z = e.space;
  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  require(phi, z.point_carrier(), z.point_count(), "lip");
  require(psi, z.point_carrier(), z.point_count(), "lip");
  AlgebraElement out(z.left_carrier(), g.arrow_count());
  for (Index gamma = 0; gamma < g.arrow_count(); ++gamma) {
    const auto base_points = z.left().anchor_fiber(g.source(gamma));
    if (base_points.empty()) throw std::invalid_argument("lip: no point over s(" + g.arrow_id(gamma) + ")");
    bool first = true;
    for (Index base : base_points) {
      Complex acc = 0.0;
      for (Index eta : h.r_fiber(z.s(base))) {
        const Index moved = z.act_right(base, eta);
        acc += phi[z.act_left(gamma, moved)] * std::conj(psi[moved]) * e.right_haar[eta];
      }
      if (first) {
        out[gamma] = acc;
        first = false;
      } else if (!close(out[gamma], acc)) {
        throw BrokenEquivalenceError("left inner product at " + g.arrow_id(gamma) + " depends on the base point " +
                                     z.point_id(base));
      }
    }
  }
  return out;
}

AlgebraElement op_star(const AlgebraElement& psi) {
  Carrier target;
  if (psi.carrier() == Carrier::Zop) {
    target = Carrier::Z;
  } else if (psi.carrier() == Carrier::Z) {
    target = Carrier::Zop;
  } else {
    throw CarrierMismatch("op_star: expected an element on Z or Zop");
  }
  AlgebraElement out(target, psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = std::conj(psi[i]);
  return out;
}

LinkingAlgebra::LinkingAlgebra(Equivalence e, std::optional<HaarSystem> kappa_override)
    : e_(std::move(e)), op_(e_), link_(build_linking(e_.space)) {
  kappa_ = kappa_override ? std::move(*kappa_override) : build_linking_haar(link_, e_.left_haar, e_.right_haar);
  if (kappa_.size() != link_.l().arrow_count()) throw CarrierMismatch("linking Haar table has the wrong size");
}

AlgebraElement LinkingAlgebra::convolve(const AlgebraElement& f, const AlgebraElement& k) const {
  require(f, Carrier::L, l().arrow_count(), "linking convolve");
  require(k, Carrier::L, l().arrow_count(), "linking convolve");
  return groupoidal::convolve(f, k, l(), kappa_);
}

AlgebraElement LinkingAlgebra::convolve_blocks(const AlgebraElement& f, const AlgebraElement& k) const {
  const Blocks a = block_decompose(link_, f);
  const Blocks b = block_decompose(link_, k);
  const FiniteGroupoid& g = e_.g();
  const FiniteGroupoid& h = e_.h();

  Blocks out{
      groupoidal::convolve(a.gg, b.gg, g, e_.left_haar) + op_.rip(op_star(a.gz), b.zg),
      left_action(e_, a.gg, b.gz) + right_action(e_, a.gz, b.hh),
      op_.act_right(a.zg, b.gg) + op_.act_left(a.hh, b.zg),
      rip(e_, op_star(a.zg), b.gz) + groupoidal::convolve(a.hh, b.hh, h, e_.right_haar),
  };
  return block_compose(link_, out);
}

AlgebraElement convolve_linking_blockwise(const LinkingAlgebra& a, const AlgebraElement& f, const AlgebraElement& k) {
  AlgebraElement blockwise = a.convolve_blocks(f, k);
  const AlgebraElement direct = a.convolve(f, k);
  double worst = 0.0;
  Index worst_arrow = npos;
  for (Index i = 0; i < direct.size(); ++i) {
    const double d = std::abs(blockwise[i] - direct[i]);
    if (d > worst) {
      worst = d;
      worst_arrow = i;
    }
  }
  if (worst > kBlockTolerance) {
    throw BrokenEquivalenceError("block formula and direct product differ by " + detail::num(worst) + " at " +
                                 a.l().arrow_id(worst_arrow));
  }
  return blockwise;
}

}  // namespace groupoidal
