#include <gtest/gtest.h>

#include <set>

#include "ivevp/catalog.hpp"
#include "ivevp/ekeland.hpp"
#include "ivevp/report.hpp"
#include "ivevp/selftest.hpp"

using namespace ivevp;

TEST(Catalog, LabelsUniqueAndFindable) {
  const auto all = catalog();
  EXPECT_EQ(all.size(), 12u);
  std::set<std::string> labels;
  for (const auto& e : all) {
    EXPECT_TRUE(labels.insert(e.label).second) << e.label;
    EXPECT_EQ(find_entry(e.label).label, e.label);
    EXPECT_EQ(e.probe.size(), e.dim()) << e.label;
    EXPECT_EQ(e.search_box.dim(), e.dim()) << e.label;
  }
  try {
    find_entry("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownIdentifier);
  }
  EXPECT_EQ(sequence_catalog().size(), 7u);
  EXPECT_THROW(find_sequence("nope"), Error);
}

TEST(Json, Reals) {
  EXPECT_EQ(json_real(1.5).dump(), "1.5");
  EXPECT_EQ(json_real(kInf).dump(), "\"+inf\"");
  EXPECT_EQ(json_real(-kInf).dump(), "\"-inf\"");
  EXPECT_EQ(json_real(std::nan("")).dump(), "\"nan\"");
  EXPECT_EQ(json_interval({-kInf, 0}).dump(), R"({"lo":"-inf","hi":0.0})");
  EXPECT_EQ(json_point(Point{1, 2}).dump(), "[1.0,2.0]");
}

TEST(Json, RecordKeyOrder) {
  const auto r = make_record("probe", {{"fn", "quadratic"}}, "ok", Json::object(), Json::object(), 7);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"op", "inputs", "verdict", "evidence", "params", "seed"}));
}

TEST(Json, CertificateFields) {
  EkelandInput inp{find_entry("quadratic").f, {0.05}, 0.01, 1, SampleGrid(Box::cube(1, -2, 2), 401)};
  const auto j = json_certificate(evp_search(inp));
  for (const char* key : {"x0", "xbar", "eps", "delta", "tol", "valid", "checks", "infimum", "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["valid"], true);
  EXPECT_EQ(j["checks"]["distance"]["bound"], 0.01);
  EXPECT_EQ(j["checks"]["uniqueness"]["violations"], 0);
}

TEST(Csv, Quoting) {
  EXPECT_EQ(to_csv({{"a", "b"}, {"1,2", "say \"hi\""}}), "a,b\n\"1,2\",\"say \"\"hi\"\"\"\n");
  EXPECT_EQ(to_csv({}), "");
}

TEST(Selftest, PassesAndIsByteStable) {
  const auto a = run_selftest(1);
  const auto b = run_selftest(1);
  EXPECT_TRUE(a.ok) << a.report.dump(2);
  EXPECT_EQ(a.report.dump(2), b.report.dump(2));
}
