#include <filesystem>

#include <gtest/gtest.h>

#include "pitop/fixtures.hpp"

using namespace pitop;

namespace {

std::string parse_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Io, CorpusRoundTripsByteForByte) {
  for (const FixtureFile& f : fixture_corpus()) {
    std::string again;
    if (f.kind == "category") again = write_category_toml(parse_category_toml(f.text, f.file));
    if (f.kind == "diagram") again = write_diagram_json(parse_diagram_json(f.text, f.file));
    if (f.kind == "surgery") again = write_surgery_json(parse_surgery_json(f.text, f.file));
    if (f.kind == "hopf") again = write_hopf_json(parse_hopf_json(f.text, f.file));
    EXPECT_EQ(again, f.text) << f.file;
  }
}

TEST(Io, ParsedValuesMatchTheFixtures) {
  for (const CategoryFile& f : fixture_categories()) {
    CategoryFile g = parse_category_toml(write_category_toml(f));
    EXPECT_EQ(g.name, f.name);
    EXPECT_EQ(g.tuple, f.tuple) << f.name;
    EXPECT_EQ(g.dsign, f.dsign);
  }
  for (const NamedDiagram& d : fixture_diagrams()) EXPECT_EQ(parse_diagram_json(write_diagram_json(d.diagram)), d.diagram);
  HopfFile h = parse_hopf_json(write_hopf_json(h4_hopf_file()));
  EXPECT_EQ(h.hopf, h4_hopf_file().hopf);
  EXPECT_EQ(h.R, h4_hopf_file().R);
}

TEST(Io, CheckedInFixturesMatchTheGenerator) {
  std::filesystem::path dir = std::filesystem::path(PITOP_SOURCE_DIR) / "fixtures";
  for (const FixtureFile& f : fixture_corpus()) EXPECT_EQ(read_file((dir / f.file).string()), f.text) << f.file;
}

TEST(Io, JsonCategoryAgreesWithToml) {
  const std::string json = R"({"name": "z2", "group": "cyclic:2", "order": 2, "dsign": 1,
    "b": [0, 0], "theta": [0, 1], "c": [[0, 0], [0, 1]], "a": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]})";
  CategoryFile j = parse_category_json(json);
  EXPECT_EQ(j.tuple, fixture_categories()[2].tuple);
}

TEST(Io, TomlErrorsCarryLineAndColumn) {
  std::string msg = parse_message([] { parse_category_toml("name = \"x\"\norder = = 3\n", "bad.toml"); });
  EXPECT_NE(msg.find("bad.toml:2:"), std::string::npos) << msg;
}

TEST(Io, JsonErrorsCarryLineAndColumn) {
  std::string msg = parse_message([] { parse_diagram_json("{\n  \"events\": [,]\n}", "bad.json"); });
  EXPECT_NE(msg.find("bad.json"), std::string::npos) << msg;
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(Io, SemanticErrorsNameTheKey) {
  std::string text = write_category_toml(fixture_categories()[2]);
  std::string no_order = text;
  no_order.erase(no_order.find("order = 2\n"), 10);
  EXPECT_NE(parse_message([&] { parse_category_toml(no_order, "f.toml"); }).find("'order'"), std::string::npos);
  std::string bad_sign = text;
  bad_sign.replace(bad_sign.find("dsign = 1"), 9, "dsign = 3");
  EXPECT_NE(parse_message([&] { parse_category_toml(bad_sign, "f.toml"); }).find("dsign"), std::string::npos);
  std::string short_b = text;
  short_b.replace(short_b.find("b = [0, 0]"), 10, "b = [0]");
  EXPECT_THROW(parse_category_toml(short_b), ParseError);
  EXPECT_THROW(parse_diagram_json(R"({"inputs": [], "events": [{"event": "swirl", "position": 0}]})"), ParseError);
}

TEST(Io, SurgeryFilesAreCrossChecked) {
  ThinCategory c = fixture_surgery_category();
  for (const SurgeryFile& f : fixture_surgeries()) {
    EXPECT_TRUE(check_surgery_file(f, c.group).ok()) << f.presentation.name;
    SurgeryFile g = f;
    if (g.framings.empty()) continue;
    g.framings[0] += 1;
    EXPECT_FALSE(check_surgery_file(g, c.group).ok()) << f.presentation.name;
  }
}
