#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupoidal/element.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/report.hpp"

namespace groupoidal {

enum class Side { left, right };

/// Id-keyed description of a G-space. Left actions list {gamma, z, gamma.z};
/// right actions list {z, eta, z.eta}.
struct GSpaceTables {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> anchor;
  std::vector<std::array<std::string, 3>> action;
};

/// A finite space with a (left or right) action of a finite groupoid.
///
/// For a left space the anchor is the moment map r_X and gamma acts on z when
/// s(gamma) = r_X(z); for a right space the anchor is s_X and eta acts when
/// r(eta) = s_X(z). Points are kept in lexicographic id order.
class GSpace {
 public:
  GSpace() = default;
  static GSpace from_tables(std::shared_ptr<const FiniteGroupoid> g, Side side, const GSpaceTables& t);

  const FiniteGroupoid& groupoid() const { return *groupoid_; }
  const std::shared_ptr<const FiniteGroupoid>& groupoid_ptr() const { return groupoid_; }
  Side side() const { return side_; }

  std::size_t point_count() const { return points_.size(); }
  const std::string& point_id(Index p) const { return points_[p]; }
  const std::vector<std::string>& point_ids() const { return points_; }
  std::optional<Index> find_point(std::string_view id) const;
  Index point_index(std::string_view id) const;

  Index anchor(Index p) const { return anchor_[p]; }
  /// Whether the arrow is composable with the point's anchor.
  bool acts_on(Index arrow, Index p) const;
  /// Tabulated image, npos when absent.
  Index act(Index arrow, Index p) const { return action_[arrow * points_.size() + p]; }
  std::span<const Index> anchor_fiber(Index unit) const { return fibers_[unit]; }

  const std::vector<std::string>& load_issues() const { return load_issues_; }
  GSpaceTables to_tables() const;

 private:
  std::shared_ptr<const FiniteGroupoid> groupoid_;
  Side side_ = Side::left;
  std::vector<std::string> points_;
  std::vector<Index> anchor_;
  std::vector<Index> action_;
  std::vector<std::vector<Index>> fibers_;
  std::vector<std::string> load_issues_;
};

struct Orbit {
  Index representative;  // least point id in the orbit
  std::vector<Index> points;
};

/// Orbits in order of their representatives.
std::vector<Orbit> orbits(const GSpace& x);
/// Left action of G on its own arrows by multiplication.
GSpace self_space(std::shared_ptr<const FiniteGroupoid> g);

ValidationReport validate_gspace(const GSpace& x);

struct BispaceTables {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> r;
  std::vector<std::pair<std::string, std::string>> s;
  std::vector<std::array<std::string, 3>> left_action;   // {gamma, z, gamma.z}
  std::vector<std::array<std::string, 3>> right_action;  // {z, eta, z.eta}
};

/// A space carrying a left action of one groupoid and a right action of
/// another on the same points. Carrier tags say which algebra each side's
/// functions belong to; they are swapped by opposite_space.
class Bispace {
 public:
  Bispace() = default;
  static Bispace from_tables(std::shared_ptr<const FiniteGroupoid> left,
                             std::shared_ptr<const FiniteGroupoid> right, const BispaceTables& t,
                             Carrier point_carrier = Carrier::Z, Carrier left_carrier = Carrier::G,
                             Carrier right_carrier = Carrier::H);

  const GSpace& left() const { return left_; }
  const GSpace& right() const { return right_; }
  const FiniteGroupoid& left_groupoid() const { return left_.groupoid(); }
  const FiniteGroupoid& right_groupoid() const { return right_.groupoid(); }

  std::size_t point_count() const { return left_.point_count(); }
  const std::string& point_id(Index z) const { return left_.point_id(z); }
  const std::vector<std::string>& point_ids() const { return left_.point_ids(); }
  Index point_index(std::string_view id) const { return left_.point_index(id); }

  Index r(Index z) const { return left_.anchor(z); }
  Index s(Index z) const { return right_.anchor(z); }
  /// gamma . z
  Index act_left(Index gamma, Index z) const { return left_.act(gamma, z); }
  /// z . eta
  Index act_right(Index z, Index eta) const { return right_.act(eta, z); }

  Carrier point_carrier() const { return point_carrier_; }
  Carrier left_carrier() const { return left_carrier_; }
  Carrier right_carrier() const { return right_carrier_; }

  BispaceTables to_tables() const;

 private:
  GSpace left_;
  GSpace right_;
  Carrier point_carrier_ = Carrier::Z;
  Carrier left_carrier_ = Carrier::G;
  Carrier right_carrier_ = Carrier::H;
};

/// A bispace together with Haar systems on both groupoids.
struct Equivalence {
  Bispace space;
  HaarSystem left_haar;
  HaarSystem right_haar;

  const FiniteGroupoid& g() const { return space.left_groupoid(); }
  const FiniteGroupoid& h() const { return space.right_groupoid(); }
};

ValidationReport validate_equivalence(const Bispace& z);
/// Groupoid checks, Haar checks, and the bispace checks in one report.
ValidationReport validate_equivalence(const Equivalence& e);

/// The unique gamma with gamma . z = y. Requires s(y) = s(z).
/// Throws BracketError if no such arrow exists and BrokenEquivalenceError if
/// more than one does.
Index g_bracket(const Bispace& z, Index y, Index x);
/// The unique eta with y . eta = z. Requires r(y) = r(z).
Index h_bracket(const Bispace& z, Index y, Index x);
std::string g_bracket(const Bispace& z, std::string_view y, std::string_view x);
std::string h_bracket(const Bispace& z, std::string_view y, std::string_view x);

/// "z" -> "~z" and "~z" -> "z", so opposite_space is an exact involution.
std::string opposite_point_id(std::string_view id);

/// The (H,G)-bispace on points z-bar with eta . z-bar = (z . eta^-1)-bar and
/// z-bar . gamma = (gamma^-1 . z)-bar. Point index i of the result is the
/// mirror of point i of the input.
Bispace opposite_space(const Bispace& z);
Equivalence opposite(const Equivalence& e);

/// A measure on the points of a space, one mass per point.
struct FiberMeasure {
  std::vector<double> weights;

  double operator[](Index p) const { return weights[p]; }
  std::size_t size() const { return weights.size(); }
};

/// Exact equality when both masses are integers, 1e-12 relative otherwise.
bool masses_equal(double a, double b);
bool measures_equal(const FiberMeasure& a, const FiberMeasure& b);

/// sigma_Z^u: mass w_H(eta) at z . eta for any z over u; recomputed from every
/// z in the fiber and checked for agreement.
FiberMeasure sigma_measure(const Bispace& z, const HaarSystem& right_haar, Index u);
/// rho^{G.x}: mass w_G(gamma) at gamma^-1 . x, checked against every other
/// representative of the orbit. X must be a left space.
FiberMeasure rho_measure(const GSpace& x, const HaarSystem& w, Index point);
/// rho_mu = sum over orbits of mu(orbit) rho^{orbit}; mu is indexed like orbits(x).
FiberMeasure rho_mu_measure(const GSpace& x, const HaarSystem& w, std::span<const double> mu);

}  // namespace groupoidal
