#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupoidal/element.hpp"
#include "groupoidal/equivalence.hpp"
#include "groupoidal/groupoid.hpp"
#include "groupoidal/linking.hpp"

namespace groupoidal::io {

using nlohmann::json;

/// Throws FormatError when the file is missing or not JSON.
json read_json_file(const std::filesystem::path& path);

struct LoadedGroupoid {
  FiniteGroupoid groupoid;
  HaarSystem haar;
};

/// {"units", "arrows":[{"id","src","dst"}], "compose":[[a,b,ab]], "inverse":[[a,ainv]],
///  "haar":[[a,w]], optional "unit_arrows":[[u,a]]}. Arrows with no Haar entry
/// get weight 1.
LoadedGroupoid groupoid_from_json(const json& j);
json groupoid_to_json(const FiniteGroupoid& g, const HaarSystem& w);
/// Groupoid file for L with an extra "sector" field on each arrow.
json linking_to_json(const LinkingGroupoid& link, const HaarSystem& kappa);

/// "G" and "H" are inline groupoid objects or paths relative to base_dir.
Equivalence equivalence_from_json(const json& j, const std::filesystem::path& base_dir = {});
json equivalence_to_json(const Equivalence& e);

/// {"carrier", "values":[[id, re, im]]}; ids index into `ids`, absent ids are zero.
AlgebraElement element_from_json(const json& j, const std::vector<std::string>& ids);
json element_to_json(const AlgebraElement& f, const std::vector<std::string>& ids);

}  // namespace groupoidal::io
