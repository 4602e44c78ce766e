#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "groupoidal/errors.hpp"
#include "groupoidal/fixtures.hpp"
#include "groupoidal/io.hpp"
#include "support.hpp"

using namespace groupoidal;
namespace fx = groupoidal::fixtures;
using io::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "groupoidal_io_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Io, GroupoidRoundTrip) {
  for (const auto& c : support::groupoid_cases()) {
    SCOPED_TRACE(c.name);
    const io::LoadedGroupoid back = io::groupoid_from_json(io::groupoid_to_json(c.g, c.w));
    EXPECT_EQ(back.groupoid.arrow_ids(), c.g.arrow_ids());
    EXPECT_EQ(back.haar.weights, c.w.weights);
    EXPECT_EQ(io::groupoid_to_json(back.groupoid, back.haar), io::groupoid_to_json(c.g, c.w));
  }
}

TEST(Io, IntegerIdsAndDefaultWeights) {
  const json j = json::parse(R"j({
    "units": [0],
    "arrows": [{"id": 0, "src": 0, "dst": 0}, {"id": 1, "src": 0, "dst": 0}],
    "compose": [[0,0,0],[0,1,1],[1,0,1],[1,1,0]],
    "inverse": [[0,0],[1,1]],
    "haar": [[1, 1.0]]
  })j");
  const io::LoadedGroupoid g = io::groupoid_from_json(j);
  EXPECT_EQ(g.groupoid.arrow_ids(), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(g.haar.weights, (std::vector<double>{1.0, 1.0}));
  EXPECT_TRUE(validate_groupoid(g.groupoid).ok());
}

TEST(Io, MalformedInputIsAFormatError) {
  EXPECT_THROW(io::groupoid_from_json(json::parse(R"j({"units": ["a"]})j")), FormatError);
  EXPECT_THROW(io::groupoid_from_json(json::parse(R"j([1,2,3])j")), FormatError);
  const json j = io::groupoid_to_json(fx::fix_b(), HaarSystem::counting(fx::fix_b()));
  json bad = j;
  bad["haar"].push_back({"g7", 1.0});
  EXPECT_THROW(io::groupoid_from_json(bad), FormatError);

  const auto p = scratch("broken.json");
  write(p, "{ not json");
  EXPECT_THROW(io::read_json_file(p), FormatError);
  EXPECT_THROW(io::read_json_file(scratch("does-not-exist.json")), FormatError);
}

TEST(Io, EquivalenceRoundTripAndRelativePaths) {
  const Equivalence d = fx::fix_d();
  const json inline_form = io::equivalence_to_json(d);
  const Equivalence back = io::equivalence_from_json(inline_form);
  EXPECT_EQ(io::equivalence_to_json(back), inline_form);
  EXPECT_TRUE(validate_equivalence(back).ok());

  write(scratch("g.json"), io::groupoid_to_json(d.g(), d.left_haar).dump());
  write(scratch("h.json"), io::groupoid_to_json(d.h(), d.right_haar).dump());
  json by_path = inline_form;
  by_path["G"] = "g.json";
  by_path["H"] = "h.json";
  const Equivalence loaded = io::equivalence_from_json(by_path, scratch("g.json").parent_path());
  EXPECT_EQ(io::equivalence_to_json(loaded), inline_form);
  EXPECT_THROW(io::equivalence_from_json(by_path, "/nonexistent"), FormatError);
}

TEST(Io, Elements) {
  const FiniteGroupoid a = fx::fix_a();
  const json j = json::parse(R"j({"carrier": "G", "values": [["(1,2)", 2.0], ["(2,1)", 0.5, -1.0]]})j");
  const AlgebraElement f = io::element_from_json(j, a.arrow_ids());
  EXPECT_EQ(f[a.arrow_index("(1,2)")], Complex(2.0));
  EXPECT_EQ(f[a.arrow_index("(2,1)")], Complex(0.5, -1.0));
  EXPECT_EQ(f[a.arrow_index("(1,1)")], Complex(0.0));
  EXPECT_EQ(io::element_to_json(f, a.arrow_ids())["values"].size(), 2u);
  EXPECT_EQ(max_abs_diff(io::element_from_json(io::element_to_json(f, a.arrow_ids()), a.arrow_ids()), f), 0.0);
  EXPECT_THROW(io::element_from_json(json::parse(R"j({"values": [["(9,9)", 1.0]]})j"), a.arrow_ids()), FormatError);
}

TEST(Io, LinkingFileCarriesSectors) {
  const Equivalence d = fx::fix_d();
  const LinkingGroupoid link = build_linking(d.space);
  const json j = io::linking_to_json(link, build_linking_haar(link, d.left_haar, d.right_haar));
  ASSERT_EQ(j["arrows"].size(), 9u);
  for (const auto& a : j["arrows"]) EXPECT_TRUE(a.contains("sector"));
  EXPECT_TRUE(validate_groupoid(io::groupoid_from_json(j).groupoid).ok());
}
