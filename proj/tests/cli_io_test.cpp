#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "helpers.hpp"

using namespace testing_support;

namespace {

const char* const kFixtures[] = {"curve_example.json", "smooth_curve_d4.json", "single_line.json",
                                 "zariski_i.json",     "zariski_ii.json",      "smooth_n2_d3.json"};

std::string expect_error_text(const std::string& doc) {
  try {
    (void)parse_spec_text(doc);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(HODGEINF_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(HODGEINF_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(ParseSpec, ZariskiFixture) {
  const AnalysisInput in = load_fixture("zariski_i.json");
  const auto& spec = std::get<StarPolynomialSpec>(in);
  EXPECT_EQ(spec.n, 2);
  EXPECT_EQ(spec.d, 6);
  ASSERT_EQ(spec.locals.size(), 6u);
  for (const auto& m : spec.locals)
    EXPECT_EQ(std::get<BrieskornPham>(m.variant()).exponents, (std::vector<int>{2, 3}));
  EXPECT_EQ(spec.global.pn1_cover.at(1), (std::map<int, std::int64_t>{{2, 1}}));
  EXPECT_EQ(spec.global.pn1_cover.at(5), (std::map<int, std::int64_t>{{1, 1}}));
  EXPECT_TRUE(spec.global.pn_xinf.empty());
}

TEST(ParseSpec, CurveFixture) {
  const auto c = std::get<CurveSpec>(load_fixture("curve_example.json"));
  EXPECT_EQ(c.d(), 4);
  EXPECT_EQ(c.gcd(), 2);
}

TEST(ParseSpec, AllModels) {
  const auto in = parse_spec_text(R"({
    "n": 2, "d": 5,
    "singularities": [
      {"model": "quasihomogeneous", "weights": ["1/2", "1/3"]},
      {"model": "spectral-pairs", "variables": 2, "pairs": [["-1/6", 1], ["1/6", 1, 1]]},
      {"model": "join", "left": {"model": "brieskorn-pham", "exponents": [2]},
                        "right": {"model": "brieskorn-pham", "exponents": [3]}}
    ]
  })");
  const auto& spec = std::get<StarPolynomialSpec>(in);
  const SppSet cusp = local_spectral_pairs(BrieskornPham{{2, 3}}).pairs;
  for (const auto& s : spec.local_spectra()) EXPECT_EQ(s.pairs, cusp);
}

TEST(ParseSpec, Errors) {
  EXPECT_THROW(parse_spec_text("{ not json"), ParseError);
  EXPECT_THROW(parse_spec_text(R"({"multiplicities": [2, -1]})"), ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2})"), ParseError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2, "d": 6, "global": {"pn_xinf": [[1, -2]]}})"), ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2, "d": 6, "singularities": [{"model": "e8"}]})"), ParseError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2, "d": 6, "singularities": [{"model": "quasihomogeneous",
                                   "weights": ["2/5", "2/5"]}]})"),
               ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2, "d": 6, "global": {"pn1_cover": {"1": [[2, 1]]}}})"), ValidationError);
  EXPECT_THROW(parse_spec_text(R"({"n": 2, "d": 1})"), ValidationError);

  const std::string path = expect_error_text(
      R"({"n": 2, "d": 6, "singularities": [{"model": "brieskorn-pham", "exponents": [2, 1]}]})");
  EXPECT_NE(path.find("$.singularities[0].exponents[1]"), std::string::npos) << path;
  const std::string weight = expect_error_text(
      R"({"n": 2, "d": 6, "singularities": [{"model": "quasihomogeneous", "weights": ["1/2", 3.5]}]})");
  EXPECT_NE(weight.find("$.singularities[0].weights[1]"), std::string::npos) << weight;
}

TEST(Report, JsonRoundTripAndDeterminism) {
  for (const char* name : kFixtures) {
    const ReportDocument r = analyze(load_fixture(name));
    const Json j = to_json(r);
    EXPECT_EQ(report_from_json(j), r) << name;
    EXPECT_EQ(report_from_json(Json::parse(j.dump())), r) << name;
    EXPECT_EQ(to_json(analyze(load_fixture(name))).dump(), j.dump()) << name;
  }
}

TEST(Report, FixtureRanks) {
  EXPECT_EQ(analyze(load_fixture("curve_example.json")).rank, 7);
  EXPECT_EQ(analyze(load_fixture("smooth_curve_d4.json")).rank, 9);
  EXPECT_EQ(analyze(load_fixture("smooth_n2_d3.json")).rank, 8);
  EXPECT_EQ(analyze(load_fixture("zariski_i.json")).rank, 113);
  EXPECT_EQ(analyze(load_fixture("zariski_ii.json")).rank, 113);
  EXPECT_EQ(analyze(load_fixture("single_line.json")).rank, 6);
}

TEST(Report, TextContainsBothConventions) {
  const std::string text = render_text(analyze(load_fixture("curve_example.json")));
  EXPECT_NE(text.find("e(-1/6)"), std::string::npos);
  EXPECT_NE(text.find("5/6"), std::string::npos);
  EXPECT_NE(text.find("rank: 7"), std::string::npos);
}

TEST(Selfcheck, FixturesPass) {
  for (const char* name : kFixtures) {
    const CheckReport rep = selfcheck(load_fixture(name));
    EXPECT_TRUE(rep.passed()) << name << '\n' << rep.str();
  }
  const CheckReport curve = selfcheck(load_fixture("curve_example.json"));
  int skipped = 0;
  for (const auto& item : curve.items)
    if (item.status == CheckStatus::not_applicable) ++skipped;
  EXPECT_EQ(skipped, 2);
}

TEST(Selfcheck, CorruptedGlobalData) {
  auto spec = std::get<StarPolynomialSpec>(load_fixture("zariski_ii.json"));
  spec.global.pn_xinf[1] = 5;
  EXPECT_THROW(selfcheck(spec), InconsistentGlobalData);
}

TEST(Compare, CurvePair) {
  EXPECT_TRUE(compare(load_fixture("curve_example.json"), load_fixture("smooth_curve_d4.json")).ok());
  EXPECT_THROW(compare(load_fixture("curve_example.json"), load_fixture("zariski_i.json")), ValidationError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze " + fixture("zariski_i.json")), 0);
  EXPECT_EQ(run_cli("analyze --json " + fixture("curve_example.json")), 0);
  EXPECT_EQ(run_cli("curve --multiplicities 2,2"), 0);
  EXPECT_EQ(run_cli("jconst --n 2 --d 6 --k 1 --s 1"), 0);
  EXPECT_EQ(run_cli("selfcheck " + fixture("zariski_ii.json")), 0);
  EXPECT_EQ(run_cli("compare " + fixture("curve_example.json") + " " + fixture("smooth_curve_d4.json")), 0);

  EXPECT_EQ(run_cli("analyze " + write_temp("malformed.json", "{")), 1);
  EXPECT_EQ(run_cli("analyze " + write_temp("negative.json", R"({"multiplicities": [-2]})")), 1);
  EXPECT_EQ(run_cli("analyze /nonexistent/input.json"), 1);
  const std::string bad = write_temp(
      "inflated.json",
      R"({"n": 2, "d": 6, "singularities": [{"model": "brieskorn-pham", "exponents": [2, 3], "count": 6}],
          "global": {"pn_xinf": [[1, 5]]}})");
  EXPECT_EQ(run_cli("analyze " + bad), 2);
  EXPECT_EQ(run_cli("selfcheck " + bad), 2);
}

TEST(Cli, JsonReportFile) {
  const std::string out = std::string(HODGEINF_TEST_TMP) + "/report.json";
  std::remove(out.c_str());
  ASSERT_EQ(run_cli("analyze " + fixture("zariski_i.json") + " --report " + out), 0);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  EXPECT_EQ(report_from_json(j), analyze(load_fixture("zariski_i.json")));
}

TEST(Cli, JconstOutput) {
  const std::string out = std::string(HODGEINF_TEST_TMP) + "/jconst.txt";
  const std::string cmd = std::string(HODGEINF_CLI) + " jconst --n 2 --d 6 --k 0 --s 0 > " + out;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  int v = 0;
  in >> v;
  EXPECT_EQ(v, 10);
}
