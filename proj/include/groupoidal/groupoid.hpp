#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupoidal/report.hpp"

namespace groupoidal {

using Index = std::size_t;
inline constexpr Index npos = static_cast<Index>(-1);

struct ArrowRecord {
  std::string id;
  std::string src;
  std::string dst;
};

/// Raw, id-keyed description of a finite groupoid as it appears in fixture
/// files. Nothing here is checked; FiniteGroupoid::from_tables resolves ids.
struct GroupoidTables {
  std::vector<std::string> units;
  std::vector<ArrowRecord> arrows;
  std::vector<std::array<std::string, 3>> compose;  // {a, b, ab}
  std::vector<std::pair<std::string, std::string>> inverse;
  /// Optional. When empty, the identity at u is taken to be the unique
  /// idempotent arrow u -> u.
  std::vector<std::pair<std::string, std::string>> unit_arrows;
};

/// A finite discrete groupoid with dense composition and inverse tables.
///
/// Units and arrows are stored in lexicographic id order; every matrix and
/// element indexes arrows by this order. Construction never throws on bad
/// references: they are recorded and surfaced by validate_groupoid.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  static FiniteGroupoid from_tables(const GroupoidTables& tables);

  std::size_t unit_count() const { return units_.size(); }
  std::size_t arrow_count() const { return arrow_ids_.size(); }

  const std::string& unit_id(Index u) const { return units_[u]; }
  const std::string& arrow_id(Index a) const { return arrow_ids_[a]; }
  const std::vector<std::string>& unit_ids() const { return units_; }
  const std::vector<std::string>& arrow_ids() const { return arrow_ids_; }

  std::optional<Index> find_unit(std::string_view id) const;
  std::optional<Index> find_arrow(std::string_view id) const;
  /// Throws std::out_of_range for unknown ids.
  Index unit_index(std::string_view id) const;
  Index arrow_index(std::string_view id) const;

  Index range(Index a) const { return dst_[a]; }
  Index source(Index a) const { return src_[a]; }
  /// npos when the pair is absent from the table.
  Index compose(Index a, Index b) const { return compose_[a * arrow_count() + b]; }
  Index inverse(Index a) const { return inverse_[a]; }
  Index unit_arrow(Index u) const { return unit_arrow_[u]; }
  bool is_unit_arrow(Index a) const;

  /// G^u, in canonical order.
  std::span<const Index> r_fiber(Index u) const { return r_fibers_[u]; }
  /// G_u, in canonical order.
  std::span<const Index> s_fiber(Index u) const { return s_fibers_[u]; }

  /// Reference problems found while resolving the tables.
  const std::vector<std::string>& load_issues() const { return load_issues_; }
  /// Extra inconsistencies that do not fit the dense tables (duplicate
  /// compose rows with different results and the like).
  const std::vector<std::pair<std::string, std::string>>& table_conflicts() const {
    return conflicts_;
  }

  GroupoidTables to_tables() const;

 private:
  std::vector<std::string> units_;
  std::vector<std::string> arrow_ids_;
  std::vector<Index> src_;
  std::vector<Index> dst_;
  std::vector<Index> compose_;
  std::vector<Index> inverse_;
  std::vector<Index> unit_arrow_;
  std::vector<std::vector<Index>> r_fibers_;
  std::vector<std::vector<Index>> s_fibers_;
  std::vector<std::string> load_issues_;
  std::vector<std::pair<std::string, std::string>> conflicts_;
};

/// Per-arrow Haar masses: weights[a] is the mass of {a} under lambda^{r(a)}.
/// The inversion image lambda_u is read off as weights[inverse(a)].
struct HaarSystem {
  std::vector<double> weights;

  static HaarSystem counting(const FiniteGroupoid& g);
  /// weight(a) = per_unit[s(a)]; always left invariant.
  static HaarSystem from_source_weights(const FiniteGroupoid& g, std::span<const double> per_unit);

  double operator[](Index a) const { return weights[a]; }
  std::size_t size() const { return weights.size(); }
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);
ValidationReport validate_haar(const FiniteGroupoid& g, const HaarSystem& w);

std::vector<std::string> r_fiber(const FiniteGroupoid& g, std::string_view unit);
std::vector<std::string> s_fiber(const FiniteGroupoid& g, std::string_view unit);

}  // namespace groupoidal

#include "groupoidal/element.hpp"

namespace groupoidal {

/// max over units of the r-fiber sums of |f| w and of the s-fiber sums of
/// |f| against the inversion image of w.
double i_norm(const AlgebraElement& f, const FiniteGroupoid& g, const HaarSystem& w);

}  // namespace groupoidal
