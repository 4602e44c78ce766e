#pragma once

#include <memory>
#include <span>
#include <string>

#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"

namespace groupoidal::fixtures {

/// Pair groupoid on units "1".."n": arrows "(i,j)" from j to i.
FiniteGroupoid pair_groupoid(int n);
/// Z/n on the single unit "e": arrows "g0".."g{n-1}", zero-padded past 10.
FiniteGroupoid cyclic_group(int n);
/// Single unit "*", single arrow "id_*".
FiniteGroupoid trivial_group();
/// pair(n) x Z/m: arrows "(i,j;k)".
FiniteGroupoid transitive_groupoid(int n, int m);
/// Disjoint union; ids are prefixed "a:" and "b:".
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

inline FiniteGroupoid fix_a() { return pair_groupoid(2); }
inline FiniteGroupoid fix_b() { return cyclic_group(2); }
inline FiniteGroupoid fix_c() { return trivial_group(); }
/// FIX-A with w((i,j)) = c_j, c = (1, 2).
HaarSystem fix_e_haar(const FiniteGroupoid& fix_a);

/// pair(n) acting on points "z1".."zn" over the trivial group; n = 2 is FIX-D.
Equivalence pair_trivial_equivalence(int n);
/// pair(n) x Z/m acting on {1..n} x Z/m, with Z/m acting on the right.
Equivalence pair_cyclic_equivalence(int n, int m);
/// pair(n) x Z/m and pair(p) x Z/m linked by {1..n} x {1..p} x Z/m.
Equivalence transitive_equivalence(int n, int p, int m);

inline Equivalence fix_d() { return pair_trivial_equivalence(2); }
/// Z/2 acting on itself from both sides.
Equivalence fix_f();

/// Replaces the Haar systems by source-weighted ones (one mass per unit).
Equivalence reweighted(const Equivalence& e, std::span<const double> g_unit_mass,
                       std::span<const double> h_unit_mass);

}  // namespace groupoidal::fixtures
