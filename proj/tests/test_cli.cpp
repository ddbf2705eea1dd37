#include <gtest/gtest.h>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "lissajous/error.hpp"
#include "report.hpp"

using namespace lissajous;
using namespace lissajous::cli;
using nlohmann::ordered_json;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"lissajous"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

ordered_json load_golden(const std::string& name) {
  std::ifstream in(std::string(LISSAJOUS_GOLDEN_DIR) + "/" + name);
  return ordered_json::parse(in);
}

// Exact comparison, except "approx" values which only need to agree closely.
void expect_json_close(const ordered_json& a, const ordered_json& b, const std::string& path = "") {
  ASSERT_EQ(a.type(), b.type()) << path;
  if (a.is_object()) {
    ASSERT_EQ(a.size(), b.size()) << path;
    auto ib = b.begin();
    for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
      ASSERT_EQ(ia.key(), ib.key()) << path;
      expect_json_close(ia.value(), ib.value(), path + "/" + ia.key());
    }
  } else if (a.is_array()) {
    ASSERT_EQ(a.size(), b.size()) << path;
    for (std::size_t i = 0; i < a.size(); ++i) expect_json_close(a[i], b[i], path + "/" + std::to_string(i));
  } else if (a.is_number_float()) {
    EXPECT_NEAR(a.get<double>(), b.get<double>(), 1e-12 * std::abs(b.get<double>())) << path;
  } else {
    EXPECT_EQ(a, b) << path;
  }
}

}  // namespace

TEST(ParseType, AcceptsAndRejects) {
  EXPECT_EQ(parse_type("4,-5"), (LissajousType{4, -5}));
  EXPECT_EQ(parse_type("-11,16"), (LissajousType{-11, 16}));
  EXPECT_THROW(parse_type(" -11 , 16 "), Error);
  EXPECT_THROW(parse_type("4"), Error);
  EXPECT_THROW(parse_type("4,x"), Error);
  EXPECT_THROW(parse_type("4,-5,1"), Error);
}

TEST(Classify, MatchesGolden) {
  CliRun r = run({"classify", "--type", "4,-5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  expect_json_close(ordered_json::parse(r.out), load_golden("classify_4_-5.json"));

  r = run({"classify", "--type", "-11,16"});
  ASSERT_EQ(r.code, kOk) << r.err;
  expect_json_close(ordered_json::parse(r.out), load_golden("classify_-11_16.json"));
}

TEST(Classify, ExitCodes) {
  EXPECT_EQ(run({"classify", "--type", "3,2"}).code, kUsage);
  EXPECT_EQ(run({"classify", "--type", "2,4"}).code, kUsage);
  EXPECT_EQ(run({"classify", "--type", "nonsense"}).code, kUsage);
  EXPECT_EQ(run({"classify"}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);

  CliRun r = run({"classify", "--type", "-5,7"});
  EXPECT_EQ(r.code, kCollision);
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_FALSE(j["collision_free"].get<bool>());
  EXPECT_FALSE(j.contains("p0"));
}

TEST(Classify, TextCarriesSameNumbers) {
  CliRun text = run({"classify", "--type", "-23,28", "--text"});
  CliRun json = run({"classify", "--type", "-23,28"});
  ASSERT_EQ(text.code, kOk);
  ordered_json j = ordered_json::parse(json.out);
  EXPECT_NE(text.out.find("friezeH: " + j["friezeH"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find("dilatation: " + j["dilatation"]["exact"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find("far_endpoint: " + j["far_endpoint"]["exact"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find("syzygy: " + j["syzygy"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.out.find("period [3,3,5,3,3]"), std::string::npos);
}

TEST(Report, RoundTripsThroughNormalizedType) {
  for (const LissajousType& t : {LissajousType{4, -5}, LissajousType{-2, 1}, LissajousType{5, 7}, LissajousType{-11, 16}}) {
    Report a = build_report(t);
    Report b = build_report(a.normalized.type());
    ordered_json ja = to_json(a), jb = to_json(b);
    ja.erase("input");
    jb.erase("input");
    EXPECT_EQ(ja, jb) << to_string(t);
  }
}

TEST(Report, LargeIntegersBecomeStrings) {
  EXPECT_TRUE(integer_json(Integer(42)).is_number_integer());
  Integer big = Integer(1) << 70;
  ordered_json j = integer_json(big);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(j.get<std::string>(), "1180591620717411303424");
}

TEST(FromLabel, InverseOfClassify) {
  CliRun r = run({"from-label", "--level", "2", "--slope", "0/1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_EQ(j["p0"]["m"], 4);
  EXPECT_EQ(j["p0"]["n"], -5);
  EXPECT_EQ(run({"from-label", "--level", "1", "--slope", "1/2"}).code, kUsage);
  EXPECT_EQ(run({"from-label", "--level", "2", "--slope", "2/4"}).code, kUsage);
}

TEST(Cf, TextAndJson) {
  CliRun r = run({"cf", "--type", "-23,28"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "(509+5√14933)/338\npreperiod []\nperiod [3,3,5,3,3]\n");
  r = run({"cf", "--type", "4,-5", "--json"});
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_EQ(j["cf"]["period"], ordered_json::array({3}));
}

TEST(Syzygy, GroupedOutput) {
  CliRun r = run({"syzygy", "--type", "-8,13", "--group"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1231312.3123231.2312123.1231312.3123231.2312123\n");
}

TEST(Enumerate, SmallRanges) {
  CliRun r = run({"enumerate", "--max-m", "7"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.out,
            "{\"m\":1,\"n\":-2,\"level\":1,\"slope\":\"0/1\"}\n"
            "{\"m\":4,\"n\":-5,\"level\":2,\"slope\":\"0/1\"}\n"
            "{\"m\":7,\"n\":-8,\"level\":3,\"slope\":\"0/1\"}\n");
}

TEST(Verify, SummaryLineAndExitCode) {
  CliRun r = run({"verify", "--suite", "epsilon", "--max-m", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("PASS (4,-5)"), std::string::npos);
  EXPECT_NE(r.out.find("all 2 cases pass"), std::string::npos);
  r = run({"verify", "--suite", "cf", "--quiet"});
  EXPECT_EQ(r.out, "all 180 cases pass\n");
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kUsage);
}

TEST(Plot, WritesFiles) {
  std::string path = ::testing::TempDir() + "lissajous_cli_plot.svg";
  CliRun r = run({"plot", "--kind", "shape", "--type", "4,-5", "--out", path.c_str(), "--steps", "500"});
  EXPECT_EQ(r.code, kOk) << r.err;
  std::ifstream in(path);
  EXPECT_TRUE(in.good());
  // Exit code 2 is reserved for classify; other commands report collisions as input errors.
  r = run({"plot", "--kind", "shape", "--type", "-5,7", "--out", path.c_str()});
  EXPECT_EQ(r.code, kUsage);
  r = run({"plot", "--kind", "halfplane", "--type", "4,-5", "--out", "/nonexistent-dir/x.svg"});
  EXPECT_EQ(r.code, kUsage);
}
