#include "psmod_cli/cli.hpp"

#include <psmod/error.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PSMOD_DEFAULT_FIXTURE_DIR
#define PSMOD_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace psmod::cli {

namespace {

/// Every key of `expected` must appear in `actual` with a matching value;
/// objects and equal-length arrays match recursively, everything else by
/// equality.
void compare(const json& expected, const json& actual, const std::string& path,
             std::vector<std::string>& diffs) {
  if (expected.is_object() && actual.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string sub = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key()))
        diffs.push_back(sub + ": missing");
      else
        compare(it.value(), actual.at(it.key()), sub, diffs);
    }
    return;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    for (size_t i = 0; i < expected.size(); ++i)
      compare(expected[i], actual[i], path + "[" + std::to_string(i) + "]", diffs);
    return;
  }
  if (expected != actual) diffs.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
}

}  // namespace

std::string fixture_dir(const json& args) {
  if (args.contains("fixtures")) return args.at("fixtures").get<std::string>();
  if (const char* env = std::getenv("PSMOD_FIXTURE_DIR"); env && *env) return env;
  return PSMOD_DEFAULT_FIXTURE_DIR;
}

json run_suite(const json& args) {
  const std::string path = fixture_dir(args) + "/paper_suite.json";
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open fixture file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json fixtures;
  try {
    fixtures = json::parse(buf.str(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  const std::string filter = args.value("filter", "");
  json checks = json::array();
  size_t failed = 0;
  for (const auto& fx : fixtures.at("checks")) {
    const std::string name = fx.at("name");
    const std::string group = fx.value("group", "");
    if (!filter.empty() && name.find(filter) == std::string::npos && group.find(filter) == std::string::npos)
      continue;
    std::vector<std::string> diffs;
    json result;
    try {
      result = run_command(fx.at("command"), fx.value("args", json::object()));
    } catch (const std::exception& e) {
      result = error_report(fx.at("command"), e, nullptr);
    }
    compare(fx.at("expect"), result, "", diffs);
    if (!diffs.empty()) ++failed;
    checks.push_back({{"name", name}, {"group", group}, {"pass", diffs.empty()}, {"mismatches", diffs}});
  }
  json out{{"schema", 1}, {"command", "paper-suite"}, {"status", failed == 0 ? "verified" : "refuted"}};
  out["fixture_file"] = path;
  out["run"] = checks.size();
  out["failed"] = failed;
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace psmod::cli
