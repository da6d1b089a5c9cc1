#include "chardeg/suites.hpp"

#include <gtest/gtest.h>

using namespace chardeg;

namespace {

RunConfig config_for(std::vector<std::string> suites) {
  RunConfig c;
  c.suites = std::move(suites);
  return c;
}

std::size_t count(const RunResult &r, Status s) {
  return static_cast<std::size_t>(
      std::count_if(r.reports.begin(), r.reports.end(), [&](const CheckReport &x) { return x.status == s; }));
}

const CheckReport &find_report(const RunResult &r, const std::string &id) {
  for (const auto &x : r.reports)
    if (x.id == id) return x;
  throw std::out_of_range(id);
}

} // namespace

TEST(Suites, Parsing) {
  EXPECT_EQ(parse_range("5..30"), std::make_pair(5, 30));
  EXPECT_EQ(parse_range(" 7 "), std::make_pair(7, 7));
  EXPECT_THROW(parse_range("9..7"), InputError);
  EXPECT_THROW(parse_range("a..b"), InputError);
  EXPECT_EQ(parse_rational("1/4"), ExactRational(1, 4));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_EQ(canonical_suite("lie-steinberg"), "lie");
  EXPECT_EQ(canonical_suite("dolfi-bases"), "bases");
  EXPECT_THROW(canonical_suite("bogus"), InputError);
}

TEST(Suites, ConfigValidation) {
  EXPECT_THROW(run(config_for({})), InputError);
  auto c = config_for({"alt-base-case"});
  c.n_range = std::make_pair(3, 10);
  EXPECT_THROW(run(c), InputError);
  c = config_for({"psl2"});
  c.cap = 0;
  EXPECT_THROW(run(c), InputError);
  c = config_for({"rectangles"});
  c.delta = ExactRational(1, 2);
  EXPECT_THROW(run(c), InputError);
  c = config_for({"kstats"});
  c.catalog_path = "/nonexistent.json";
  EXPECT_THROW(run(c), CatalogError);
  c.catalog_path = std::string(CHARDEG_TEST_DATA_DIR) + "/malformed_catalog.json";
  EXPECT_THROW(run(c), CatalogError);
}

TEST(Suites, AltBaseCase) {
  auto c = config_for({"alt-base-case"});
  c.n_range = std::make_pair(5, 30);
  const auto r = run(c);
  EXPECT_EQ(r.reports.size(), 26u);
  EXPECT_EQ(count(r, Status::Pass), 26u);
  EXPECT_EQ(r.exit_code, 0);
  const auto &six = find_report(r, "alt-base-case/n=06");
  EXPECT_EQ(*six.find("steinberg^3"), "729");
  EXPECT_EQ(*six.find("|A_n|"), "360");
}

TEST(Suites, WreathRemark) {
  const auto r = run(config_for({"wreath-remark"}));
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(*r.reports[0].find("min_centralizer"), "48");
  EXPECT_EQ(*r.reports[0].find("orbit_sizes"), "{1,9,27,27}");
  EXPECT_EQ(*r.reports[1].find("min_centralizer"), "72");
  EXPECT_EQ(*r.reports[1].find("orbit_sizes"), "{1,16,64}");
  EXPECT_EQ(count(r, Status::Pass), 2u);
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Suites, BasesAndGating) {
  const auto r = run(config_for({"dolfi-bases"}));
  EXPECT_EQ(find_report(r, "bases/GL(2,2)/size2-classes").status, Status::Pass);
  EXPECT_EQ(*find_report(r, "bases/SL(2,3)/size2-classes").find("classes"), "2");
  EXPECT_EQ(*find_report(r, "bases/GL(1,5)/size2-classes").find("classes"), "6");
  EXPECT_EQ(count(r, Status::AwaitingGenerators), 3u);
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Suites, ExpectedFailsDoNotBreakTheRun) {
  const auto r = run(config_for({"inequalities"}));
  EXPECT_EQ(find_report(r, "inequalities/AGL(2,3)/k-le-fitting").status, Status::ExpectedFail);
  EXPECT_EQ(r.exit_code, 0);
  for (const auto &x : r.reports)
    if (x.status == Status::Skipped || x.status == Status::ExpectedFail) { EXPECT_FALSE(x.reason.empty()) << x.id; }
}

TEST(Suites, CatalogEntryErrorsAreReported) {
  auto c = config_for({"orbits"});
  c.catalog_path = std::string(CHARDEG_TEST_DATA_DIR) + "/order_mismatch_catalog.json";
  const auto r = run(c);
  const auto &err = find_report(r, "catalog/GL(2,3)");
  EXPECT_EQ(err.status, Status::Skipped);
  EXPECT_NE(err.reason.find("claimed order 47"), std::string::npos);
  EXPECT_EQ(find_report(r, "orbits/GL(2,2)").status, Status::Pass);
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Suites, UnexpectedFailureSetsExitOne) {
  auto c = config_for({"psl2"});
  c.q_max = 8;
  const auto r = run(c);
  EXPECT_EQ(find_report(r, "psl2/q=0005").status, Status::Fail);
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Suites, DeterministicAcrossJobCounts) {
  auto c = config_for({"lie", "psl2", "sporadic", "wreath-remark", "alt-base-case"});
  c.q_max = 9;
  const auto serial = run(c);
  c.jobs = 4;
  const auto parallel = run(c);
  std::ostringstream a, b;
  render_json(a, serial, false);
  render_json(b, parallel, false);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_TRUE(std::is_sorted(serial.reports.begin(), serial.reports.end(),
                             [](const CheckReport &x, const CheckReport &y) { return x.id < y.id; }));
}

TEST(Suites, JsonRendering) {
  auto c = config_for({"wreath-remark"});
  c.timing = true;
  const auto r = run(c);
  std::ostringstream os;
  render_json(os, r, true);
  const auto doc = nlohmann::json::parse(os.str());
  ASSERT_EQ(doc["reports"].size(), 2u);
  EXPECT_EQ(doc["reports"][0]["status"], "pass");
  EXPECT_TRUE(doc["reports"][0]["values"]["|G|"].is_string());
  EXPECT_TRUE(doc["reports"][0].contains("runtime_ms"));
  EXPECT_EQ(doc["summary"]["pass"], 2);
  EXPECT_EQ(doc["exit_code"], 0);
  std::ostringstream plain;
  render_json(plain, r, false);
  EXPECT_FALSE(nlohmann::json::parse(plain.str())["reports"][0].contains("runtime_ms"));
}

TEST(Suites, SporadicRecomputation) {
  const auto r = run(config_for({"sporadic"}));
  const auto &m11 = find_report(r, "sporadic/01-M11");
  EXPECT_EQ(m11.status, Status::Pass);
  EXPECT_EQ(*m11.find("enumerated_order"), "7920");
  EXPECT_EQ(*m11.find("degrees"), "{1,10,10,10,11,16,16,44,45,55}");
  EXPECT_EQ(find_report(r, "sporadic/02-M12").status, Status::Pass);
  EXPECT_EQ(r.exit_code, 0);
}
