#include "groupoidal/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "groupoidal/errors.hpp"

namespace groupoidal {

GSpace GSpace::from_tables(std::shared_ptr<const FiniteGroupoid> g, Side side, const GSpaceTables& t) {
  GSpace x;
  x.groupoid_ = std::move(g);
  x.side_ = side;
  x.points_ = t.points;
  std::sort(x.points_.begin(), x.points_.end());
  for (std::size_t i = 1; i < x.points_.size(); ++i) {
    if (x.points_[i] == x.points_[i - 1]) x.load_issues_.push_back("duplicate point id '" + x.points_[i] + "'");
  }
  x.points_.erase(std::unique(x.points_.begin(), x.points_.end()), x.points_.end());

  const FiniteGroupoid& grp = *x.groupoid_;
  x.anchor_.assign(x.points_.size(), npos);
  for (const auto& [p, u] : t.anchor) {
    auto ip = x.find_point(p);
    auto iu = grp.find_unit(u);
    if (!ip || !iu) {
      x.load_issues_.push_back("anchor entry (" + p + ", " + u + ") references an unknown id");
      continue;
    }
    x.anchor_[*ip] = *iu;
  }
  for (Index p = 0; p < x.points_.size(); ++p) {
    if (x.anchor_[p] == npos) x.load_issues_.push_back("point '" + x.points_[p] + "' has no anchor");
  }

  x.action_.assign(grp.arrow_count() * x.points_.size(), npos);
  for (const auto& row : t.action) {
    const std::string& arrow = side == Side::left ? row[0] : row[1];
    const std::string& point = side == Side::left ? row[1] : row[0];
    auto ia = grp.find_arrow(arrow);
    auto ip = x.find_point(point);
    auto ires = x.find_point(row[2]);
    if (!ia || !ip || !ires) {
      x.load_issues_.push_back("action entry (" + row[0] + ", " + row[1] + ") -> " + row[2] +
                               " references an unknown id");
      continue;
    }
    Index& slot = x.action_[*ia * x.points_.size() + *ip];
    if (slot != npos && slot != *ires) {
      x.load_issues_.push_back("action entry (" + row[0] + ", " + row[1] + ") listed twice with different results");
      continue;
    }
    slot = *ires;
  }

  x.fibers_.assign(grp.unit_count(), {});
  for (Index p = 0; p < x.points_.size(); ++p) {
    if (x.anchor_[p] != npos) x.fibers_[x.anchor_[p]].push_back(p);
  }
  return x;
}

std::optional<Index> GSpace::find_point(std::string_view id) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), id);
  if (it == points_.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - points_.begin());
}

Index GSpace::point_index(std::string_view id) const {
  if (auto p = find_point(id)) return *p;
  throw std::out_of_range("unknown point '" + std::string(id) + "'");
}

bool GSpace::acts_on(Index arrow, Index p) const {
  const Index end = side_ == Side::left ? groupoid_->source(arrow) : groupoid_->range(arrow);
  return end != npos && end == anchor_[p];
}

GSpaceTables GSpace::to_tables() const {
  GSpaceTables t;
  t.points = points_;
  const FiniteGroupoid& g = *groupoid_;
  for (Index p = 0; p < points_.size(); ++p) {
    if (anchor_[p] != npos) t.anchor.emplace_back(points_[p], g.unit_id(anchor_[p]));
  }
  for (Index a = 0; a < g.arrow_count(); ++a) {
    for (Index p = 0; p < points_.size(); ++p) {
      const Index q = act(a, p);
      if (q == npos) continue;
      if (side_ == Side::left) {
        t.action.push_back({g.arrow_id(a), points_[p], points_[q]});
      } else {
        t.action.push_back({points_[p], g.arrow_id(a), points_[q]});
      }
    }
  }
  return t;
}

std::vector<Orbit> orbits(const GSpace& x) {
  const FiniteGroupoid& g = x.groupoid();
  std::vector<Orbit> out;
  std::vector<bool> seen(x.point_count(), false);
  for (Index p = 0; p < x.point_count(); ++p) {
    if (seen[p] || x.anchor(p) == npos) continue;
    Orbit orbit{p, {}};
    auto arrows = x.side() == Side::left ? g.s_fiber(x.anchor(p)) : g.r_fiber(x.anchor(p));
    for (Index a : arrows) {
      const Index q = x.act(a, p);
      if (q != npos && !seen[q]) {
        seen[q] = true;
        orbit.points.push_back(q);
      }
    }
    seen[p] = true;
    if (std::find(orbit.points.begin(), orbit.points.end(), p) == orbit.points.end()) orbit.points.push_back(p);
    std::sort(orbit.points.begin(), orbit.points.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

GSpace self_space(std::shared_ptr<const FiniteGroupoid> g) {
  GSpaceTables t;
  t.points = g->arrow_ids();
  for (Index a = 0; a < g->arrow_count(); ++a) t.anchor.emplace_back(g->arrow_id(a), g->unit_id(g->range(a)));
  for (Index a = 0; a < g->arrow_count(); ++a) {
    for (Index b : g->r_fiber(g->source(a))) {
      t.action.push_back({g->arrow_id(a), g->arrow_id(b), g->arrow_id(g->compose(a, b))});
    }
  }
  return GSpace::from_tables(std::move(g), Side::left, t);
}

ValidationReport validate_gspace(const GSpace& x) {
  ValidationReport report;
  for (const auto& issue : x.load_issues()) report.add("reference", issue);
  const FiniteGroupoid& g = x.groupoid();
  const bool left = x.side() == Side::left;
  auto pid = [&](Index p) -> const std::string& { return x.point_id(p); };

  for (Index a = 0; a < g.arrow_count(); ++a) {
    for (Index p = 0; p < x.point_count(); ++p) {
      if (x.anchor(p) == npos) continue;
      const bool acts = x.acts_on(a, p);
      const Index q = x.act(a, p);
      if (acts && q == npos) {
        report.add("definedness", "action of " + g.arrow_id(a) + " on " + pid(p) + " is missing");
      } else if (!acts && q != npos) {
        report.add("definedness", "action of " + g.arrow_id(a) + " on " + pid(p) + " listed but not composable");
      } else if (acts && x.anchor(q) != npos) {
        const Index expected = left ? g.range(a) : g.source(a);
        if (x.anchor(q) != expected) {
          report.add("anchor", "image of " + pid(p) + " under " + g.arrow_id(a) + " sits over the wrong unit");
        }
      }
    }
  }

  for (Index p = 0; p < x.point_count(); ++p) {
    if (x.anchor(p) == npos) continue;
    const Index e = g.unit_arrow(x.anchor(p));
    if (e == npos || x.act(e, p) != p) {
      report.add("unit-action", "identity at the anchor of " + pid(p) + " does not fix it");
    }
  }

  // (gamma eta) . z = gamma . (eta . z) on the left; z . (gamma eta) = (z . gamma) . eta on the right.
  for (Index a = 0; a < g.arrow_count(); ++a) {
    for (Index b : g.r_fiber(g.source(a))) {
      const Index ab = g.compose(a, b);
      if (ab == npos) continue;
      for (Index p = 0; p < x.point_count(); ++p) {
        const Index first = left ? b : a;
        const Index second = left ? a : b;
        if (!x.acts_on(first, p)) continue;
        const Index mid = x.act(first, p);
        if (mid == npos || !x.acts_on(second, mid)) continue;
        const Index stepwise = x.act(second, mid);
        const Index direct = x.act(ab, p);
        if (stepwise != direct) {
          report.add("compatibility", "composite " + g.arrow_id(ab) + " and its factors disagree on " + pid(p));
        }
      }
    }
  }

  for (Index u = 0; u < g.unit_count(); ++u) {
    if (x.anchor_fiber(u).empty()) report.add("anchor-surjective", "no point over unit '" + g.unit_id(u) + "'");
  }

  for (Index a = 0; a < g.arrow_count(); ++a) {
    if (g.is_unit_arrow(a)) continue;
    for (Index p = 0; p < x.point_count(); ++p) {
      if (x.acts_on(a, p) && x.act(a, p) == p) {
        report.add("freeness", "non-identity " + g.arrow_id(a) + " fixes " + pid(p));
      }
    }
  }
  report.note("proper: trivially true (finite)");
  return report;
}

Bispace Bispace::from_tables(std::shared_ptr<const FiniteGroupoid> left,
                             std::shared_ptr<const FiniteGroupoid> right, const BispaceTables& t,
                             Carrier point_carrier, Carrier left_carrier, Carrier right_carrier) {
  Bispace z;
  z.left_ = GSpace::from_tables(std::move(left), Side::left, {t.points, t.r, t.left_action});
  z.right_ = GSpace::from_tables(std::move(right), Side::right, {t.points, t.s, t.right_action});
  z.point_carrier_ = point_carrier;
  z.left_carrier_ = left_carrier;
  z.right_carrier_ = right_carrier;
  return z;
}

BispaceTables Bispace::to_tables() const {
  GSpaceTables l = left_.to_tables();
  GSpaceTables r = right_.to_tables();
  return {l.points, l.anchor, r.anchor, l.action, r.action};
}

ValidationReport validate_equivalence(const Bispace& z) {
  ValidationReport report;
  report.merge(validate_gspace(z.left()), "left action");
  ValidationReport right = validate_gspace(z.right());
  for (const auto& v : right.violations()) report.add(v.axiom, "right action: " + v.detail);
  if (!report.ok()) return report;

  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  const std::size_t n = z.point_count();

  for (Index p = 0; p < n; ++p) {
    for (Index gamma : g.s_fiber(z.r(p))) {
      const Index q = z.act_left(gamma, p);
      if (z.s(q) != z.s(p)) report.add("anchor", "left action by " + g.arrow_id(gamma) + " moves s of " + z.point_id(p));
      for (Index eta : h.r_fiber(z.s(p))) {
        const Index via_right = z.act_left(gamma, z.act_right(p, eta));
        const Index via_left = z.act_right(q, eta);
        if (via_right != via_left) {
          report.add("commute", "(" + g.arrow_id(gamma) + " . " + z.point_id(p) + ") . " + h.arrow_id(eta) +
                                    " differs from " + g.arrow_id(gamma) + " . (" + z.point_id(p) + " . " +
                                    h.arrow_id(eta) + ")");
        }
      }
    }
    for (Index eta : h.r_fiber(z.s(p))) {
      if (z.r(z.act_right(p, eta)) != z.r(p)) {
        report.add("anchor", "right action by " + h.arrow_id(eta) + " moves r of " + z.point_id(p));
      }
    }
  }

  // r_Z identifies Z/H with G^0 exactly when every r-fiber is a single H-orbit.
  for (const Orbit& orbit : orbits(z.right())) {
    const Index u = z.r(orbit.representative);
    if (orbit.points.size() != z.left().anchor_fiber(u).size()) {
      report.add("transitivity", "r-fiber over '" + g.unit_id(u) + "' is not a single H-orbit");
    }
  }
  for (const Orbit& orbit : orbits(z.left())) {
    const Index v = z.s(orbit.representative);
    if (orbit.points.size() != z.right().anchor_fiber(v).size()) {
      report.add("transitivity", "s-fiber over '" + h.unit_id(v) + "' is not a single G-orbit");
    }
  }
  report.note("proper: trivially true (finite)");
  return report;
}

ValidationReport validate_equivalence(const Equivalence& e) {
  ValidationReport report;
  report.merge(validate_groupoid(e.g()), "G");
  report.merge(validate_groupoid(e.h()), "H");
  if (!report.ok()) return report;
  report.merge(validate_haar(e.g(), e.left_haar), "G Haar");
  report.merge(validate_haar(e.h(), e.right_haar), "H Haar");
  ValidationReport z = validate_equivalence(e.space);
  report.merge(z, "Z");
  return report;
}

Index g_bracket(const Bispace& z, Index y, Index x) {
  if (z.s(y) != z.s(x)) {
    throw BracketError("G-bracket needs s(" + z.point_id(y) + ") = s(" + z.point_id(x) + ")");
  }
  const FiniteGroupoid& g = z.left_groupoid();
  Index found = npos;
  for (Index gamma : g.s_fiber(z.r(x))) {
    if (z.act_left(gamma, x) != y) continue;
    if (found != npos) {
      throw BrokenEquivalenceError("G-bracket [" + z.point_id(y) + ", " + z.point_id(x) +
                                   "] is not unique: left action is not free");
    }
    found = gamma;
  }
  if (found == npos) {
    throw BracketError("no arrow of G carries " + z.point_id(x) + " to " + z.point_id(y));
  }
  return found;
}

Index h_bracket(const Bispace& z, Index y, Index x) {
  if (z.r(y) != z.r(x)) {
    throw BracketError("H-bracket needs r(" + z.point_id(y) + ") = r(" + z.point_id(x) + "): distinct r-fibers");
  }
  const FiniteGroupoid& h = z.right_groupoid();
  Index found = npos;
  for (Index eta : h.r_fiber(z.s(y))) {
    if (z.act_right(y, eta) != x) continue;
    if (found != npos) {
      throw BrokenEquivalenceError("H-bracket [" + z.point_id(y) + ", " + z.point_id(x) +
                                   "] is not unique: right action is not free");
    }
    found = eta;
  }
  if (found == npos) {
    throw BracketError("no arrow of H carries " + z.point_id(y) + " to " + z.point_id(x));
  }
  return found;
}

std::string g_bracket(const Bispace& z, std::string_view y, std::string_view x) {
  return z.left_groupoid().arrow_id(g_bracket(z, z.point_index(y), z.point_index(x)));
}

std::string h_bracket(const Bispace& z, std::string_view y, std::string_view x) {
  return z.right_groupoid().arrow_id(h_bracket(z, z.point_index(y), z.point_index(x)));
}

std::string opposite_point_id(std::string_view id) {
  if (!id.empty() && id.front() == '~') return std::string(id.substr(1));
  return "~" + std::string(id);
}

Bispace opposite_space(const Bispace& z) {
  const FiniteGroupoid& g = z.left_groupoid();
  const FiniteGroupoid& h = z.right_groupoid();
  BispaceTables t;
  for (Index p = 0; p < z.point_count(); ++p) {
    const std::string bar = opposite_point_id(z.point_id(p));
    t.points.push_back(bar);
    if (z.s(p) != npos) t.r.emplace_back(bar, h.unit_id(z.s(p)));
    if (z.r(p) != npos) t.s.emplace_back(bar, g.unit_id(z.r(p)));
  }
  // eta . z-bar = (z . eta^-1)-bar, defined when s(eta) = s(z).
  for (Index p = 0; p < z.point_count(); ++p) {
    if (z.s(p) == npos) continue;
    for (Index eta : h.s_fiber(z.s(p))) {
      const Index q = z.act_right(p, h.inverse(eta));
      if (q == npos) continue;
      t.left_action.push_back({h.arrow_id(eta), opposite_point_id(z.point_id(p)), opposite_point_id(z.point_id(q))});
    }
  }
  // z-bar . gamma = (gamma^-1 . z)-bar, defined when r(gamma) = r(z).
  for (Index p = 0; p < z.point_count(); ++p) {
    if (z.r(p) == npos) continue;
    for (Index gamma : g.r_fiber(z.r(p))) {
      const Index q = z.act_left(g.inverse(gamma), p);
      if (q == npos) continue;
      t.right_action.push_back({opposite_point_id(z.point_id(p)), g.arrow_id(gamma), opposite_point_id(z.point_id(q))});
    }
  }
  Bispace out = Bispace::from_tables(z.right().groupoid_ptr(), z.left().groupoid_ptr(), t,
                                     z.point_carrier() == Carrier::Z ? Carrier::Zop : Carrier::Z,
                                     z.right_carrier(), z.left_carrier());
  for (Index p = 0; p < z.point_count(); ++p) {
    if (out.point_id(p) != opposite_point_id(z.point_id(p))) {
      throw std::logic_error("opposite_space: point ids do not mirror in order");
    }
  }
  return out;
}

Equivalence opposite(const Equivalence& e) {
  return Equivalence{opposite_space(e.space), e.right_haar, e.left_haar};
}

bool masses_equal(double a, double b) {
  if (a == std::floor(a) && b == std::floor(b)) return a == b;
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

bool measures_equal(const FiberMeasure& a, const FiberMeasure& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!masses_equal(a[i], b[i])) return false;
  }
  return true;
}

namespace {

FiberMeasure right_orbit_measure(const Bispace& z, const HaarSystem& w, Index p) {
  const FiniteGroupoid& h = z.right_groupoid();
  FiberMeasure m{std::vector<double>(z.point_count(), 0.0)};
  for (Index eta : h.r_fiber(z.s(p))) m.weights[z.act_right(p, eta)] += w[eta];
  return m;
}

FiberMeasure left_orbit_measure(const GSpace& x, const HaarSystem& w, Index p) {
  const FiniteGroupoid& g = x.groupoid();
  FiberMeasure m{std::vector<double>(x.point_count(), 0.0)};
  for (Index gamma : g.r_fiber(x.anchor(p))) m.weights[x.act(g.inverse(gamma), p)] += w[gamma];
  return m;
}

}  // namespace

FiberMeasure sigma_measure(const Bispace& z, const HaarSystem& right_haar, Index u) {
  auto fiber = z.left().anchor_fiber(u);
  if (fiber.empty()) {
    throw std::invalid_argument("sigma_measure: no point over unit '" + z.left_groupoid().unit_id(u) + "'");
  }
  FiberMeasure m = right_orbit_measure(z, right_haar, fiber.front());
  for (Index p : fiber.subspan(1)) {
    if (!measures_equal(m, right_orbit_measure(z, right_haar, p))) {
      throw BrokenEquivalenceError("sigma measure over '" + z.left_groupoid().unit_id(u) +
                                   "' depends on the representative " + z.point_id(p));
    }
  }
  return m;
}

FiberMeasure rho_measure(const GSpace& x, const HaarSystem& w, Index point) {
  if (x.side() != Side::left) throw std::invalid_argument("rho_measure: needs a left space");
  FiberMeasure m = left_orbit_measure(x, w, point);
  for (Index q = 0; q < x.point_count(); ++q) {
    if (m[q] == 0.0 || q == point) continue;
    if (!measures_equal(m, left_orbit_measure(x, w, q))) {
      throw BrokenEquivalenceError("orbit measure of " + x.point_id(point) + " depends on the representative " +
                                   x.point_id(q));
    }
  }
  return m;
}

FiberMeasure rho_mu_measure(const GSpace& x, const HaarSystem& w, std::span<const double> mu) {
  const auto all = orbits(x);
  if (mu.size() != all.size()) throw std::invalid_argument("rho_mu_measure: one mass per orbit required");
  FiberMeasure out{std::vector<double>(x.point_count(), 0.0)};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mu[i] < 0.0 || !std::isfinite(mu[i])) throw std::invalid_argument("rho_mu_measure: negative orbit mass");
    if (mu[i] == 0.0) continue;
    FiberMeasure orbit = rho_measure(x, w, all[i].representative);
    for (Index p = 0; p < x.point_count(); ++p) out.weights[p] += mu[i] * orbit[p];
  }
  return out;
}

}  // namespace groupoidal
