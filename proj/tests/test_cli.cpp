#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "octeig/cli/commands.hpp"
#include "octeig/cli/property_suite.hpp"
#include "octeig/error.hpp"
#include "octeig/examples.hpp"

using namespace octeig;
using namespace octeig::cli;

namespace {

int run_tool(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(OCTEIG_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(OCTEIG_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(JsonIo, RoundTrip) {
  const JordanMatrix a = make_example2(0.3, 1.7).matrix;
  const JordanMatrix b = jordan_from_json(to_json(a));
  EXPECT_EQ(b.p, a.p);
  EXPECT_LE(distance(b.b, a.b), 0.0);
  const OctVec3 v = make_example1(0, 1, 0.2).pairs[1].v;
  EXPECT_LE((vec3_from_json(to_json(v)) - v).norm(), 0.0);
  const Json j = to_json(basis::kl);
  ASSERT_EQ(j.size(), 8u);
  EXPECT_EQ(j[4].get<double>(), 1.0);
}

TEST(JsonIo, ParseErrorsCarryLocation) {
  try {
    parse_matrix_file("{\n  \"p\": 1,\n  \"m\": ,\n}");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_matrix_file(R"({"p":1,"m":2,"n":3,"a":[1,2,3],"b":[0,0,0,0,0,0,0,0],"c":[0,0,0,0,0,0,0,0]})");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos) << e.what();
  }
  try {
    parse_matrix_file(R"({"p":1,"m":2,"n":3,"a":[0,0,0,0,0,0,0,0],"c":[0,0,0,0,0,0,0,0]})");
    FAIL() << "no throw";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_matrix_file(R"({"example": 4})"), ParseError);
  EXPECT_THROW(parse_octonion("[1,2]"), ParseError);
}

TEST(JsonIo, ExampleDocuments) {
  const MatrixFile f = parse_matrix_file(R"({"example": 1, "p": 0, "q": 1, "theta": 0.5})");
  ASSERT_TRUE(f.example.has_value());
  EXPECT_LE((f.matrix.to_matrix() - make_example1(0, 1, 0.5).matrix.to_matrix()).norm(), 0.0);
  EXPECT_LE(distance(parse_octonion("2.5"), Octonion(2.5)), 0.0);
}

TEST(Report, SortedAndSummarized) {
  Report r("table");
  r.add(upper_bound_check("b", 1.0, 0.5, "identity", 1));
  r.add(upper_bound_check("a", 0.1, 0.5, "identity", 1));
  Check d = upper_bound_check("c", 0.0, 1.0, "worked-example", 13);
  d.status = Status::discrepancy;
  r.add(d);
  const Json j = r.to_json();
  EXPECT_EQ(j["checks"][0]["name"], "a");
  EXPECT_EQ(j["checks"][1]["status"], "fail");
  EXPECT_EQ(j["summary"]["discrepancy"], 1);
  EXPECT_TRUE(r.has_failures());
  EXPECT_EQ(j["table_convention"], "table");
  EXPECT_NE(r.to_text().find("1 pass, 1 fail, 1 discrepancy"), std::string::npos);
}

TEST(PropertySuite, DeterministicAndPassing) {
  const auto a = run_property_suite(500, 42);
  const auto b = run_property_suite(500, 42);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  for (const auto& r : a) EXPECT_TRUE(r.passed()) << r.name << " " << r.max_deviation;
  const auto c = run_property_suite(500, 43);
  EXPECT_NE(to_json(a).dump(), to_json(c).dump());
}

TEST(PropertySuite, SingleTrial) {
  for (const auto& r : run_property_suite(1, 9)) EXPECT_EQ(r.samples, 1u) << r.name;
}

TEST(VerifyPaper, ReportShape) {
  const Report rep = cmd_verify_paper(42);
  const Json j = rep.to_json();
  EXPECT_GE(j["checks"].size(), 25u);
  EXPECT_FALSE(rep.has_failures());
  EXPECT_NE(rep.table_convention().find("(i,j,k)"), std::string::npos);
  std::set<std::string> names;
  std::set<int> criteria;
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(names.insert(c["name"].get<std::string>()).second);
    criteria.insert(c["criterion"].get<int>());
  }
  for (int k = 1; k <= 13; ++k) EXPECT_TRUE(criteria.count(k)) << "criterion " << k;
  const Check* real = rep.find("example2.real_eigenvalues");
  ASSERT_NE(real, nullptr);
  EXPECT_EQ(real->status, Status::discrepancy);
  EXPECT_EQ(real->measured.size(), 12u);
  EXPECT_EQ(cmd_verify_paper(42).to_json().dump(), j.dump());
}

TEST(Eigs, Diagonal) {
  MatrixFile f;
  f.matrix = JordanMatrix::diag(1, 2, 3);
  const Json j = cmd_eigs(f, {});
  ASSERT_EQ(j["families"].size(), 2u);
  for (const auto& fam : j["families"]) {
    EXPECT_EQ(fam["r"].get<double>(), 0.0);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(fam["lambdas"][k].get<double>(), k + 1.0, 1e-12);
  }
}

TEST(Eigs, Example1Families) {
  const Json j = cmd_eigs(parse_matrix_file(R"({"example": 1, "p": 0, "q": 1, "theta": 0})"), {});
  EXPECT_NEAR(j["families"][0]["r"].get<double>(), -4.0, 1e-12);
  EXPECT_NEAR(j["families"][0]["lambdas"][0].get<double>(), -2.0, 1e-9);
  EXPECT_NEAR(j["families"][1]["lambdas"][2].get<double>(), 2.0, 1e-9);
}

TEST(Eigs, SearchFindsVerifiedNonRealPairs) {
  const MatrixFile f = parse_matrix_file(R"({"example": 1, "p": 0, "q": 1, "theta": 0.7853981633974483})");
  EigsOptions opts;
  opts.search_nonreal = true;
  opts.seeds = 8;
  const Json j = cmd_eigs(f, opts);
  ASSERT_FALSE(j["nonreal"].empty());
  for (const auto& pr : j["nonreal"]) {
    const Octonion lam = octonion_from_json(pr["lambda"], "lambda");
    EXPECT_LE(residual_norm(f.matrix, vec3_from_json(pr["v"]), lam), 1e-8);
    EXPECT_GE(pr["nullity"].get<int>(), 1);
  }
}

TEST(Nullity, Example1) {
  const MatrixFile f = parse_matrix_file(R"({"example": 1, "p": 1, "q": 2, "theta": 0.6283185307179586})");
  const Example1 ex = make_example1(1, 2, 0.6283185307179586);
  EXPECT_EQ(cmd_nullity(f, find_pair(ex.pairs, "w+").lambda)["nullity"].get<int>(), 1);
  EXPECT_EQ(cmd_nullity(f, find_pair(ex.pairs, "u+").lambda)["nullity"].get<int>(), 5);
  const MatrixFile g = parse_matrix_file(R"({"example": 2, "p": 0, "q": 1})");
  const Example2 e2 = make_example2(0, 1);
  EXPECT_EQ(cmd_nullity(g, find_pair(e2.pairs, "w1").lambda)["nullity"].get<int>(), 1);
}

TEST(Tool, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_tool("verify-paper", &out), 0);
  EXPECT_TRUE(Json::parse(out).contains("checks"));
  EXPECT_EQ(run_tool("property-suite --trials 50 --seed 3 --format text", &out), 0);
  EXPECT_NE(out.find("octonion.alternativity"), std::string::npos);
  EXPECT_EQ(run_tool("calibrate"), 0);
  EXPECT_EQ(run_tool("eigs --example 2 --p 0.3 --q 1.7"), 0);
  EXPECT_EQ(run_tool("nullity --example 1 --theta 0.5 --lambda '[1,0,0,0,0,0,0,0]'"), 0);
  EXPECT_EQ(run_tool("no-such-command"), 2);
  EXPECT_EQ(run_tool("eigs --format xml --example 1"), 2);
  EXPECT_EQ(run_tool("eigs"), 2);
  EXPECT_EQ(run_tool("eigs --example 7"), 2);
  const std::string bad = write_temp("bad_matrix.json", "{\"p\": 1, \"m\": }");
  EXPECT_EQ(run_tool("eigs " + bad), 2);
  const std::string good = write_temp("diag_matrix.json",
                                       R"({"p":1,"m":2,"n":3,"a":[0,0,0,0,0,0,0,0],"b":[0,0,0,0,0,0,0,0],"c":[0,0,0,0,0,0,0,0]})");
  EXPECT_EQ(run_tool("eigs " + good + " --format text", &out), 0);
  EXPECT_NE(out.find("family r=0"), std::string::npos) << out;
}

TEST(Tool, PropertySuiteIsBitReproducible) {
  std::string a, b;
  ASSERT_EQ(run_tool("property-suite --trials 200 --seed 5", &a), 0);
  ASSERT_EQ(run_tool("property-suite --trials 200 --seed 5", &b), 0);
  EXPECT_EQ(a, b);
}
