#include <psmod/psmod.hpp>
#include <psmod_cli/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using psmod::cli::json;
using psmod::cli::run_command;

namespace {

json refine_args(const char* domain, const char* module, const char* a, const char* b, const char* x,
                 const char* y) {
  return {{"domain", domain}, {"module", module}, {"a", a}, {"b", b}, {"x", x}, {"y", y}};
}

int code_of(const std::string& cmd, const json& args) {
  try {
    return psmod::cli::exit_code(run_command(cmd, args));
  } catch (const std::exception& e) {
    int code = -1;
    psmod::cli::error_report(cmd, e, &code);
    return code;
  }
}

}  // namespace

TEST(Cli, RefineCertificate) {
  const json r = run_command("refine", refine_args("Z", "rank 2 gens [(1,0),(0,1)]", "2", "3", "(3,3)", "(2,2)"));
  EXPECT_EQ(r["schema"], 1);
  EXPECT_EQ(r["outcome"], "found");
  EXPECT_EQ(r["refinement"]["c"], "1");
  EXPECT_EQ(r["refinement"]["z"], "(1, 1)");
  EXPECT_EQ(r["refinement"]["verified"], true);
  EXPECT_EQ(psmod::cli::exit_code(r), 0);
}

TEST(Cli, CertificateElementsReparse) {
  const json r = run_command("refine", refine_args("loc(Z[w,-3]; [2, 1+w, 1-w])", "rank 1 gens [1]", "(1+w)*5",
                                                   "10", "2/(1+w)", "1"));
  ASSERT_EQ(r["outcome"], "found");
  const psmod::Domain d = psmod::parse_domain(r["instance"]["scalars"].get<std::string>());
  const psmod::Module m = psmod::parse_module(r["instance"]["module"].get<std::string>());
  const psmod::Domain& ed = psmod::element_domain(m);
  const auto& t = r["refinement"];
  const psmod::Instance back =
      psmod::make_instance(d, m, psmod::parse_element(d, r["instance"]["a"].get<std::string>()),
                           psmod::parse_element(d, r["instance"]["b"].get<std::string>()),
                           psmod::parse_vector(ed, r["instance"]["x"].get<std::string>()),
                           psmod::parse_vector(ed, r["instance"]["y"].get<std::string>()));
  const psmod::Refinement table{psmod::parse_element(d, t["c"].get<std::string>()),
                                psmod::parse_element(d, t["d"].get<std::string>()),
                                psmod::parse_element(d, t["e"].get<std::string>()),
                                psmod::parse_vector(ed, t["z"].get<std::string>())};
  EXPECT_TRUE(psmod::verify(back, table));
  EXPECT_EQ(psmod::format_module(m), r["instance"]["module"]);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(code_of("refine", refine_args("Z[w,-5]", "rank 1 gens [(1)]", "2", "1+w", "3", "1-w")), 1);
  EXPECT_EQ(code_of("refine", refine_args("Q[x]", "rank 1 gens [1]", "x^2-1", "x+1", "1", "x-1")), 2);
  EXPECT_EQ(code_of("refine", refine_args("Z[w,-4]", "rank 1 gens [1]", "1", "1", "1", "1")), 3);
  EXPECT_EQ(code_of("refine", {{"domain", "Z"}}), 3);
  EXPECT_EQ(code_of("principal", {{"domain", "Z[w,-5]"}, {"ideal", "[3, 1+w]"}}), 1);
  EXPECT_EQ(code_of("principal", {{"domain", "Z[w,-3]"}, {"ideal", "[2]"}}), 0);
  EXPECT_EQ(code_of("nope", json::object()), 3);
}

TEST(Cli, ParseErrorsCarryPositions) {
  try {
    run_command("principal", {{"domain", "Z[w,-4]"}, {"ideal", "[1]"}});
    FAIL();
  } catch (const std::exception& e) {
    int code = 0;
    const json r = psmod::cli::error_report("principal", e, &code);
    EXPECT_EQ(code, 3);
    EXPECT_EQ(r["error"]["kind"], "parse");
    EXPECT_EQ(r["error"]["line"], 1);
    EXPECT_EQ(r["error"]["column"], 6);
  }
}

TEST(Cli, IdealSerialization) {
  const json r = run_command("colon", {{"domain", "Z[w,-5]"}, {"module", "rank 1 gens [1] loc by [2]"},
                                       {"a", "1+w"}, {"x", "1"}});
  EXPECT_EQ(r["ideal"]["hnf_basis"], json::parse(R"([["1","1"],["0","3"]])"));
  EXPECT_EQ(r["ideal"]["norm"], "3");
  EXPECT_TRUE(r["ideal"]["generators"].is_array());
  EXPECT_TRUE(r["principal"].is_null());
}

TEST(Cli, HumanOutputIsDerivedFromJson) {
  const json r = run_command("lcm", {{"domain", "Z"}, {"a", "4"}, {"b", "6"}, {"multiples", "[12]"}});
  const std::string text = psmod::cli::render_human(r);
  EXPECT_NE(text.find("lcm: 12"), std::string::npos);
  EXPECT_NE(text.find("status: verified"), std::string::npos);
}

TEST(Cli, PaperSuitePasses) {
  const json r = run_command("paper-suite", {{"fixtures", PSMOD_TEST_FIXTURE_DIR}});
  EXPECT_EQ(r["status"], "verified") << r.dump(2);
  EXPECT_GT(r["run"].get<int>(), 10);
  EXPECT_EQ(r["failed"], 0);
}

TEST(Cli, PaperSuiteFilter) {
  const json r = run_command("paper-suite", {{"fixtures", PSMOD_TEST_FIXTURE_DIR}, {"filter", "colon"}});
  ASSERT_GT(r["run"].get<int>(), 0);
  for (const auto& c : r["checks"]) { EXPECT_EQ(c["group"], "colon"); }
}

TEST(Cli, TamperedFixtureNamesTheFailure) {
  std::ifstream in(std::string(PSMOD_TEST_FIXTURE_DIR) + "/paper_suite.json");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const std::string from = "\"lcm\": \"12\"";
  const auto pos = text.find(from);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, from.size(), "\"lcm\": \"24\"");
  const auto dir = std::filesystem::temp_directory_path() / "psmod_tampered";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "paper_suite.json") << text;
  const json r = run_command("paper-suite", {{"fixtures", dir.string()}});
  EXPECT_EQ(psmod::cli::exit_code(r), 1);
  EXPECT_EQ(r["failed"], 1);
  for (const auto& c : r["checks"])
    EXPECT_EQ(c["pass"].get<bool>(), c["name"] != "lcm-4-6") << c["name"];
}

TEST(Cli, FixtureDirectoryFromEnvironment) {
  ::setenv("PSMOD_FIXTURE_DIR", "/nonexistent/psmod", 1);
  EXPECT_EQ(psmod::cli::fixture_dir(json::object()), "/nonexistent/psmod");
  EXPECT_EQ(psmod::cli::fixture_dir({{"fixtures", "/x"}}), "/x");
  ::unsetenv("PSMOD_FIXTURE_DIR");
}
