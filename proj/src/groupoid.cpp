#include "groupoidal/groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "groupoidal/detail/format.hpp"
#include "groupoidal/errors.hpp"

namespace groupoidal {

namespace {

template <typename T>
std::optional<Index> find_sorted(const std::vector<std::string>& ids, const T& id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - ids.begin());
}

}  // namespace

FiniteGroupoid FiniteGroupoid::from_tables(const GroupoidTables& t) {
  FiniteGroupoid g;

  g.units_ = t.units;
  std::sort(g.units_.begin(), g.units_.end());
  for (std::size_t i = 1; i < g.units_.size(); ++i) {
    if (g.units_[i] == g.units_[i - 1]) g.load_issues_.push_back("duplicate unit id '" + g.units_[i] + "'");
  }
  g.units_.erase(std::unique(g.units_.begin(), g.units_.end()), g.units_.end());

  std::vector<ArrowRecord> arrows = t.arrows;
  std::sort(arrows.begin(), arrows.end(),
            [](const ArrowRecord& a, const ArrowRecord& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i > 0 && arrows[i].id == arrows[i - 1].id) {
      g.load_issues_.push_back("duplicate arrow id '" + arrows[i].id + "'");
      continue;
    }
    g.arrow_ids_.push_back(arrows[i].id);
    auto src = g.find_unit(arrows[i].src);
    auto dst = g.find_unit(arrows[i].dst);
    if (!src) g.load_issues_.push_back("arrow '" + arrows[i].id + "' has unknown src '" + arrows[i].src + "'");
    if (!dst) g.load_issues_.push_back("arrow '" + arrows[i].id + "' has unknown dst '" + arrows[i].dst + "'");
    g.src_.push_back(src.value_or(npos));
    g.dst_.push_back(dst.value_or(npos));
  }

  const std::size_t n = g.arrow_ids_.size();
  g.compose_.assign(n * n, npos);
  for (const auto& [a, b, ab] : t.compose) {
    auto ia = g.find_arrow(a), ib = g.find_arrow(b), iab = g.find_arrow(ab);
    if (!ia || !ib || !iab) {
      g.load_issues_.push_back("compose entry (" + a + ", " + b + ") -> " + ab +
                               " references an unknown arrow");
      continue;
    }
    Index& slot = g.compose_[*ia * n + *ib];
    if (slot != npos && slot != *iab) {
      g.conflicts_.emplace_back("(" + a + ", " + b + ")",
                                "listed as both " + g.arrow_ids_[slot] + " and " + ab);
      continue;
    }
    slot = *iab;
  }

  g.inverse_.assign(n, npos);
  for (const auto& [a, ainv] : t.inverse) {
    auto ia = g.find_arrow(a), iinv = g.find_arrow(ainv);
    if (!ia || !iinv) {
      g.load_issues_.push_back("inverse entry (" + a + ", " + ainv + ") references an unknown arrow");
      continue;
    }
    if (g.inverse_[*ia] != npos && g.inverse_[*ia] != *iinv) {
      g.conflicts_.emplace_back(a, "inverse listed as both " + g.arrow_ids_[g.inverse_[*ia]] + " and " + ainv);
      continue;
    }
    g.inverse_[*ia] = *iinv;
  }

  g.r_fibers_.assign(g.units_.size(), {});
  g.s_fibers_.assign(g.units_.size(), {});
  for (Index a = 0; a < n; ++a) {
    if (g.dst_[a] != npos) g.r_fibers_[g.dst_[a]].push_back(a);
    if (g.src_[a] != npos) g.s_fibers_[g.src_[a]].push_back(a);
  }

  g.unit_arrow_.assign(g.units_.size(), npos);
  if (!t.unit_arrows.empty()) {
    for (const auto& [u, a] : t.unit_arrows) {
      auto iu = g.find_unit(u);
      auto ia = g.find_arrow(a);
      if (!iu || !ia) {
        g.load_issues_.push_back("unit arrow entry (" + u + ", " + a + ") references an unknown id");
        continue;
      }
      g.unit_arrow_[*iu] = *ia;
    }
  } else {
    for (Index u = 0; u < g.units_.size(); ++u) {
      for (Index a : g.r_fibers_[u]) {
        if (g.src_[a] == u && g.compose(a, a) == a) {
          if (g.unit_arrow_[u] != npos) {
            g.conflicts_.emplace_back(g.units_[u], "more than one idempotent arrow at this unit");
            break;
          }
          g.unit_arrow_[u] = a;
        }
      }
    }
  }
  return g;
}

std::optional<Index> FiniteGroupoid::find_unit(std::string_view id) const {
  return find_sorted(units_, id);
}

std::optional<Index> FiniteGroupoid::find_arrow(std::string_view id) const {
  return find_sorted(arrow_ids_, id);
}

Index FiniteGroupoid::unit_index(std::string_view id) const {
  if (auto u = find_unit(id)) return *u;
  throw std::out_of_range("unknown unit '" + std::string(id) + "'");
}

Index FiniteGroupoid::arrow_index(std::string_view id) const {
  if (auto a = find_arrow(id)) return *a;
  throw std::out_of_range("unknown arrow '" + std::string(id) + "'");
}

bool FiniteGroupoid::is_unit_arrow(Index a) const {
  return src_[a] != npos && src_[a] == dst_[a] && unit_arrow_[src_[a]] == a;
}

GroupoidTables FiniteGroupoid::to_tables() const {
  GroupoidTables t;
  t.units = units_;
  const std::size_t n = arrow_count();
  for (Index a = 0; a < n; ++a) {
    t.arrows.push_back({arrow_ids_[a], src_[a] == npos ? "" : units_[src_[a]],
                        dst_[a] == npos ? "" : units_[dst_[a]]});
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Index ab = compose(a, b);
      if (ab != npos) t.compose.push_back({arrow_ids_[a], arrow_ids_[b], arrow_ids_[ab]});
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (inverse_[a] != npos) t.inverse.emplace_back(arrow_ids_[a], arrow_ids_[inverse_[a]]);
  }
  return t;
}

HaarSystem HaarSystem::counting(const FiniteGroupoid& g) {
  return HaarSystem{std::vector<double>(g.arrow_count(), 1.0)};
}

HaarSystem HaarSystem::from_source_weights(const FiniteGroupoid& g, std::span<const double> per_unit) {
  if (per_unit.size() != g.unit_count()) {
    throw std::invalid_argument("one weight per unit required");
  }
  HaarSystem w;
  w.weights.resize(g.arrow_count());
  for (Index a = 0; a < g.arrow_count(); ++a) w.weights[a] = per_unit[g.source(a)];
  return w;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport report;
  for (const auto& issue : g.load_issues()) report.add("reference", issue);
  for (const auto& [where, what] : g.table_conflicts()) report.add("table-conflict", where + ": " + what);

  const std::size_t n = g.arrow_count();
  const auto& id = [&](Index a) -> const std::string& { return g.arrow_id(a); };
  auto known = [&](Index a) { return g.source(a) != npos && g.range(a) != npos; };

  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!known(a) || !known(b)) continue;
      const bool composable = g.source(a) == g.range(b);
      const Index ab = g.compose(a, b);
      if (composable && ab == npos) {
        report.add("definedness", "missing composite for composable pair (" + id(a) + ", " + id(b) + ")");
      } else if (!composable && ab != npos) {
        report.add("definedness", "composite listed for non-composable pair (" + id(a) + ", " + id(b) + ")");
      }
      if (composable && ab != npos && known(ab) &&
          (g.range(ab) != g.range(a) || g.source(ab) != g.source(b))) {
        report.add("range-consistency", "(" + id(a) + ")(" + id(b) + ") = " + id(ab) +
                                            " does not run from s(" + id(b) + ") to r(" + id(a) + ")");
      }
    }
  }

  // Associativity over every composable triple.
  for (Index b = 0; b < n; ++b) {
    if (!known(b)) continue;
    for (Index a : g.s_fiber(g.range(b))) {
      const Index ab = g.compose(a, b);
      if (ab == npos) continue;
      for (Index c : g.r_fiber(g.source(b))) {
        const Index bc = g.compose(b, c);
        if (bc == npos) continue;
        const Index left = g.compose(ab, c);
        const Index right = g.compose(a, bc);
        if (left != right) {
          report.add("associativity", "((" + id(a) + ")(" + id(b) + "))(" + id(c) + ") != (" + id(a) +
                                          ")((" + id(b) + ")(" + id(c) + "))");
        }
      }
    }
  }

  for (Index u = 0; u < g.unit_count(); ++u) {
    const Index e = g.unit_arrow(u);
    if (e == npos) {
      report.add("identity", "no identity arrow at unit '" + g.unit_id(u) + "'");
      continue;
    }
    if (g.range(e) != u || g.source(e) != u) {
      report.add("identity", "identity arrow " + id(e) + " of unit '" + g.unit_id(u) + "' is not a loop at it");
      continue;
    }
    for (Index a : g.r_fiber(u)) {
      if (g.compose(e, a) != a) report.add("identity", id(e) + " is not a left identity for " + id(a));
    }
    for (Index a : g.s_fiber(u)) {
      if (g.compose(a, e) != a) report.add("identity", id(e) + " is not a right identity for " + id(a));
    }
  }

  for (Index a = 0; a < n; ++a) {
    const Index ai = g.inverse(a);
    if (ai == npos) {
      report.add("inverse", "no inverse listed for " + id(a));
      continue;
    }
    if (g.inverse(ai) != a) report.add("inverse", "inverse is not an involution at " + id(a));
    if (!known(a) || !known(ai)) continue;
    if (g.range(ai) != g.source(a) || g.source(ai) != g.range(a)) {
      report.add("inverse", "inverse of " + id(a) + " does not swap range and source");
      continue;
    }
    const Index left = g.compose(a, ai);
    const Index right = g.compose(ai, a);
    if (left == npos || left != g.unit_arrow(g.range(a))) {
      report.add("inverse", "(" + id(a) + ")(" + id(ai) + ") is not the identity at r(" + id(a) + ")");
    }
    if (right == npos || right != g.unit_arrow(g.source(a))) {
      report.add("inverse", "(" + id(ai) + ")(" + id(a) + ") is not the identity at s(" + id(a) + ")");
    }
  }
  return report;
}

ValidationReport validate_haar(const FiniteGroupoid& g, const HaarSystem& w) {
  ValidationReport report;
  if (w.size() != g.arrow_count()) {
    report.add("domain", "Haar table has " + std::to_string(w.size()) + " weights for " +
                             std::to_string(g.arrow_count()) + " arrows");
    return report;
  }
  for (Index a = 0; a < g.arrow_count(); ++a) {
    if (!(w[a] > 0.0) || !std::isfinite(w[a])) {
      report.add("support", "weight of " + g.arrow_id(a) + " is " + detail::num(w[a]));
    }
  }
  for (Index gamma = 0; gamma < g.arrow_count(); ++gamma) {
    if (g.source(gamma) == npos) continue;
    for (Index eta : g.r_fiber(g.source(gamma))) {
      const Index prod = g.compose(gamma, eta);
      if (prod == npos) continue;
      if (w[eta] != w[prod]) {
        report.add("invariance", "gamma=" + g.arrow_id(gamma) + ", eta=" + g.arrow_id(eta) + ": w(eta)=" +
                                     detail::num(w[eta]) + " but w(gamma eta)=" + detail::num(w[prod]));
      }
    }
  }
  return report;
}

std::vector<std::string> r_fiber(const FiniteGroupoid& g, std::string_view unit) {
  std::vector<std::string> out;
  for (Index a : g.r_fiber(g.unit_index(unit))) out.push_back(g.arrow_id(a));
  return out;
}

std::vector<std::string> s_fiber(const FiniteGroupoid& g, std::string_view unit) {
  std::vector<std::string> out;
  for (Index a : g.s_fiber(g.unit_index(unit))) out.push_back(g.arrow_id(a));
  return out;
}

double i_norm(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w) {
  if (f.size() != g.arrow_count() || w.size() != g.arrow_count()) {
    throw CarrierMismatch("i_norm: element or Haar table does not match the groupoid");
  }
  double best = 0.0;
  for (Index u = 0; u < g.unit_count(); ++u) {
    double range_sum = 0.0;
    for (Index a : g.r_fiber(u)) range_sum += std::abs(f[a]) * w[a];
    double source_sum = 0.0;
    for (Index a : g.s_fiber(u)) source_sum += std::abs(f[a]) * w[g.inverse(a)];
    best = std::max({best, range_sum, source_sum});
  }
  return best;
}

}  // namespace groupoidal
