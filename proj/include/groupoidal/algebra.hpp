#pragma once

#include <optional>

#include "groupoidal/element.hpp"
#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/linking.hpp"

namespace groupoidal {

/// Convolution product on C_c(G) against the Haar system w.
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g, const FiniteGroupoid& grp,
                        const HaarSystem& w);
/// f*(gamma) = conj f(gamma^-1).
AlgebraElement involution(const AlgebraElement& f, const FiniteGroupoid& grp);

// Bimodule structure of C_c(Z) over C_c(G) (left) and C_c(H) (right).
// These read carriers off the bispace, so applied to opposite(e) they give
// the C_c(H)-C_c(G) structure on C_c(Z^op).

/// (f . phi)(z) = sum over gamma in G^{r(z)} of f(gamma) phi(gamma^-1 . z) w_G(gamma).
AlgebraElement left_action(const Equivalence& e, const AlgebraElement& f, const AlgebraElement& phi);
/// (phi . b)(z) = sum over eta in H^{s(z)} of phi(z . eta) b(eta^-1) w_H(eta).
AlgebraElement right_action(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& b);
/// Right (H-valued) inner product. Evaluated from every admissible base
/// point; throws BrokenEquivalenceError if they disagree.
AlgebraElement rip(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& psi);
/// Left (G-valued) inner product, with the same representative check.
AlgebraElement lip(const Equivalence& e, const AlgebraElement& phi, const AlgebraElement& psi);

/// psi*(z) = conj psi(z-bar); maps Z^op to Z and back.
AlgebraElement op_star(const AlgebraElement& psi);

/// C_c(Z^op) as a C_c(H)-C_c(G) bimodule, written b∘ψ and ψ∘f.
class OppositeModule {
 public:
  explicit OppositeModule(const Equivalence& e) : op_(opposite(e)) {}

  const Equivalence& equivalence() const { return op_; }
  /// b∘ψ
  AlgebraElement act_left(const AlgebraElement& b, const AlgebraElement& psi) const {
    return left_action(op_, b, psi);
  }
  /// ψ∘f
  AlgebraElement act_right(const AlgebraElement& psi, const AlgebraElement& f) const {
    return right_action(op_, psi, f);
  }
  /// G-valued inner product on C_c(Z^op).
  AlgebraElement rip(const AlgebraElement& a, const AlgebraElement& b) const { return groupoidal::rip(op_, a, b); }
  /// H-valued inner product on C_c(Z^op).
  AlgebraElement lip(const AlgebraElement& a, const AlgebraElement& b) const { return groupoidal::lip(op_, a, b); }

 private:
  Equivalence op_;
};

/// Everything needed to work in C_c(L) for one equivalence.
class LinkingAlgebra {
 public:
  explicit LinkingAlgebra(Equivalence e, std::optional<HaarSystem> kappa_override = std::nullopt);

  const Equivalence& equivalence() const { return e_; }
  const OppositeModule& opposite_module() const { return op_; }
  const LinkingGroupoid& linking() const { return link_; }
  const FiniteGroupoid& l() const { return link_.l(); }
  const HaarSystem& linking_haar() const { return kappa_; }

  /// Direct convolution on L against the linking Haar system.
  AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& k) const;
  /// The 2x2 block formula, assembled from the bimodule operations only.
  AlgebraElement convolve_blocks(const AlgebraElement& f, const AlgebraElement& k) const;

 private:
  Equivalence e_;
  OppositeModule op_;
  LinkingGroupoid link_;
  HaarSystem kappa_;
};

/// Block-formula product, cross-checked against the direct product on L to
/// 1e-12 per arrow. Throws BrokenEquivalenceError naming the worst arrow.
AlgebraElement convolve_linking_blockwise(const LinkingAlgebra& a, const AlgebraElement& f, const AlgebraElement& k);

}  // namespace groupoidal
