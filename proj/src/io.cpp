#include "groupoidal/io.hpp"

#include <fstream>
#include <memory>

#include "groupoidal/errors.hpp"

namespace groupoidal::io {

namespace {

std::string as_id(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw FormatError(std::string(what) + ": expected a string id, got " + v.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw FormatError(std::string("field \"") + key + "\" must be an array");
  return v;
}

std::vector<std::string> id_list(const json& j, const char* key) {
  std::vector<std::string> out;
  for (const json& v : array_field(j, key)) out.push_back(as_id(v, key));
  return out;
}

template <std::size_t N>
std::array<std::string, N> id_row(const json& row, const char* key) {
  if (!row.is_array() || row.size() != N) {
    throw FormatError(std::string(key) + ": each row must have " + std::to_string(N) + " entries, got " + row.dump());
  }
  std::array<std::string, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = as_id(row[i], key);
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_rows(const json& j, const char* key) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const json& row : array_field(j, key)) {
    auto r = id_row<2>(row, key);
    out.emplace_back(r[0], r[1]);
  }
  return out;
}

std::vector<std::array<std::string, 3>> triple_rows(const json& j, const char* key) {
  std::vector<std::array<std::string, 3>> out;
  for (const json& row : array_field(j, key)) out.push_back(id_row<3>(row, key));
  return out;
}

double as_number(const json& v, const char* what) {
  if (!v.is_number()) throw FormatError(std::string(what) + ": expected a number, got " + v.dump());
  return v.get<double>();
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

LoadedGroupoid groupoid_from_json(const json& j) {
  GroupoidTables t;
  t.units = id_list(j, "units");
  for (const json& a : array_field(j, "arrows")) {
    if (!a.is_object()) throw FormatError("arrows: each entry must be an object");
    t.arrows.push_back({as_id(field(a, "id"), "arrow id"), as_id(field(a, "src"), "arrow src"),
                        as_id(field(a, "dst"), "arrow dst")});
  }
  t.compose = triple_rows(j, "compose");
  t.inverse = pair_rows(j, "inverse");
  if (j.contains("unit_arrows")) t.unit_arrows = pair_rows(j, "unit_arrows");

  LoadedGroupoid out{FiniteGroupoid::from_tables(t), {}};
  out.haar = HaarSystem::counting(out.groupoid);
  if (j.contains("haar")) {
    for (const json& row : array_field(j, "haar")) {
      if (!row.is_array() || row.size() != 2) throw FormatError("haar: each row must be [arrow, weight]");
      const std::string id = as_id(row[0], "haar");
      auto a = out.groupoid.find_arrow(id);
      if (!a) throw FormatError("haar: unknown arrow '" + id + "'");
      out.haar.weights[*a] = as_number(row[1], "haar");
    }
  }
  return out;
}

json groupoid_to_json(const FiniteGroupoid& g, const HaarSystem& w) {
  const GroupoidTables t = g.to_tables();
  json j;
  j["units"] = t.units;
  j["arrows"] = json::array();
  for (const auto& a : t.arrows) j["arrows"].push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
  j["compose"] = json::array();
  for (const auto& c : t.compose) j["compose"].push_back({c[0], c[1], c[2]});
  j["inverse"] = json::array();
  for (const auto& [a, b] : t.inverse) j["inverse"].push_back({a, b});
  j["haar"] = json::array();
  for (Index a = 0; a < g.arrow_count(); ++a) j["haar"].push_back({g.arrow_id(a), w[a]});
  return j;
}

json linking_to_json(const LinkingGroupoid& link, const HaarSystem& kappa) {
  json j = groupoid_to_json(link.l(), kappa);
  for (json& a : j["arrows"]) {
    const Index i = link.l().arrow_index(a["id"].get<std::string>());
    a["sector"] = std::string(to_string(link.sector[i]));
  }
  return j;
}

Equivalence equivalence_from_json(const json& j, const std::filesystem::path& base_dir) {
  auto load_side = [&](const char* key) {
    const json& v = field(j, key);
    if (v.is_string()) return groupoid_from_json(read_json_file(base_dir / v.get<std::string>()));
    return groupoid_from_json(v);
  };
  LoadedGroupoid g = load_side("G");
  LoadedGroupoid h = load_side("H");
  BispaceTables t;
  t.points = id_list(j, "points");
  t.r = pair_rows(j, "r");
  t.s = pair_rows(j, "s");
  t.left_action = triple_rows(j, "left_action");
  t.right_action = triple_rows(j, "right_action");
  auto gp = std::make_shared<const FiniteGroupoid>(std::move(g.groupoid));
  auto hp = std::make_shared<const FiniteGroupoid>(std::move(h.groupoid));
  return Equivalence{Bispace::from_tables(gp, hp, t), std::move(g.haar), std::move(h.haar)};
}

json equivalence_to_json(const Equivalence& e) {
  const BispaceTables t = e.space.to_tables();
  json j;
  j["G"] = groupoid_to_json(e.g(), e.left_haar);
  j["H"] = groupoid_to_json(e.h(), e.right_haar);
  j["points"] = t.points;
  j["r"] = json::array();
  for (const auto& [p, u] : t.r) j["r"].push_back({p, u});
  j["s"] = json::array();
  for (const auto& [p, u] : t.s) j["s"].push_back({p, u});
  j["left_action"] = json::array();
  for (const auto& row : t.left_action) j["left_action"].push_back({row[0], row[1], row[2]});
  j["right_action"] = json::array();
  for (const auto& row : t.right_action) j["right_action"].push_back({row[0], row[1], row[2]});
  return j;
}

AlgebraElement element_from_json(const json& j, const std::vector<std::string>& ids) {
  const std::string carrier_name = as_id(field(j, "carrier"), "carrier");
  auto carrier = parse_carrier(carrier_name);
  if (!carrier) throw FormatError("unknown carrier '" + carrier_name + "'");
  AlgebraElement f(*carrier, ids.size());
  for (const json& row : array_field(j, "values")) {
    if (!row.is_array() || row.size() < 2 || row.size() > 3) {
      throw FormatError("values: each row must be [id, re] or [id, re, im]");
    }
    const std::string id = as_id(row[0], "values");
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw FormatError("values: unknown id '" + id + "'");
    const double re = as_number(row[1], "values");
    const double im = row.size() == 3 ? as_number(row[2], "values") : 0.0;
    f[static_cast<std::size_t>(it - ids.begin())] = Complex(re, im);
  }
  return f;
}

json element_to_json(const AlgebraElement& f, const std::vector<std::string>& ids) {
  if (ids.size() != f.size()) throw CarrierMismatch("element_to_json: id list does not match the element");
  json j;
  j["carrier"] = std::string(to_string(f.carrier()));
  j["values"] = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0.0) j["values"].push_back({ids[i], f[i].real(), f[i].imag()});
  }
  return j;
}

}  // namespace groupoidal::io
