#pragma once

#include <memory>
#include <vector>

#include "groupoidal/element.hpp"
#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"

namespace groupoidal {

/// Which block of G ⊔ Z ⊔ Z^op ⊔ H an arrow of the linking groupoid sits in.
enum class Sector { GG, GZ, ZG, HH };

std::string_view to_string(Sector s);

/// The linking groupoid of a (G,H)-equivalence as a FiniteGroupoid, with each
/// arrow tagged by sector and pointing back at the arrow or point it came
/// from. Arrow ids are "G:a", "Z:z", "Zop:~z", "H:b"; unit ids are "G:u", "H:v".
struct LinkingGroupoid {
  std::shared_ptr<const FiniteGroupoid> groupoid;
  Bispace space;
  Bispace opposite;
  std::vector<Sector> sector;  // per arrow of L
  std::vector<Index> origin;   // G arrow, Z point (GZ and ZG), or H arrow
  std::vector<Index> from_g, from_z, from_zop, from_h;  // inverse maps into L
  std::vector<Index> g_unit, h_unit;                    // unit of L for each unit of G / H

  const FiniteGroupoid& l() const { return *groupoid; }
};

/// Throws std::invalid_argument when the bispace does not validate and
/// BrokenEquivalenceError when a bracket fails to be unique.
LinkingGroupoid build_linking(const Bispace& z);

/// kappa^u = lambda_G^u + sigma_Z^u over units of G and
/// kappa^v = sigma_{Z^op}^v + lambda_H^v over units of H.
HaarSystem build_linking_haar(const LinkingGroupoid& link, const HaarSystem& g_haar, const HaarSystem& h_haar);

/// F11 on G, F12 on Z, F21 on Z^op, F22 on H.
struct Blocks {
  AlgebraElement gg;
  AlgebraElement gz;
  AlgebraElement zg;
  AlgebraElement hh;
};

Blocks block_decompose(const LinkingGroupoid& link, const AlgebraElement& f);
AlgebraElement block_compose(const LinkingGroupoid& link, const Blocks& blocks);

enum class Corner { G, H };

/// p_left F p_right: keeps the single block between the chosen corners.
AlgebraElement compress(const LinkingGroupoid& link, const AlgebraElement& f, Corner left, Corner right);

/// Embeds f on G (or H) as the corner element diag(f, 0) (or diag(0, f)).
AlgebraElement embed_corner(const LinkingGroupoid& link, const AlgebraElement& f, Corner corner);

}  // namespace groupoidal
