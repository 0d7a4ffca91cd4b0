#include "psmod_cli/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <algorithm>
#include <map>

namespace psmod::cli {

namespace {

struct Opt {
  const char* name;
  const char* help;
  bool is_flag = false;
};

const std::map<std::string, std::pair<const char*, std::vector<Opt>>>& spec() {
  static const Opt domain{"domain", "domain literal: Z, Z[w,-m], Q[x] or loc(D; [s1, ...])"};
  static const Opt module{"module", "module literal: rank n gens [v1, ...] [loc by [s1, ...]]"};
  static const std::vector<Opt> instance{domain,
                                         module,
                                         {"a", "scalar a"},
                                         {"b", "scalar b"},
                                         {"x", "module element x"},
                                         {"y", "module element y"},
                                         {"summand", "second summand; the module is module (+) summand"}};
  auto with = [](std::vector<Opt> base, std::vector<Opt> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  static const std::map<std::string, std::pair<const char*, std::vector<Opt>>> table{
      {"refine",
       {"decide a*x = b*y and emit a refinement certificate",
        with(instance, {{"reduce", "cancel common factors first", true},
                        {"cross_cancel", "also cancel (a, y) and (b, x)", true},
                        {"descending", "try candidates from the largest down", true},
                        {"fast_path", "prime-by-prime allocation (UFD scalars)", true},
                        {"lift_through", "solve over A_S for S = [s1, ...] and lift back to A"}})}},
      {"reduce",
       {"cancel common factors of an instance",
        with(instance, {{"cross_cancel", "also cancel (a, y) and (b, x)", true}})}},
      {"colon", {"the ideal (aM :_A x)", {domain, module, {"a", "scalar a"}, {"x", "module element x"}}}},
      {"principal", {"principal generator of an ideal, if any", {domain, {"ideal", "ideal [g1, ...]"}}}},
      {"saturate", {"saturation of an ideal by s", {domain, {"ideal", "ideal [g1, ...]"}, {"s", "element s"}}}},
      {"dm-exponent",
       {"least m with c(f)^m c(fg) = c(f)^(m+1) c(g)", {domain, {"f", "polynomial in X"}, {"g", "polynomial in X"}}}},
      {"envelope",
       {"closure of a submodule under the prime operation",
        {domain,
         module,
         {"gens", "submodule generators [v1, ...]"},
         {"norm_bound", "norm bound for a and b (default 9)"},
         {"height", "coefficient height of combinations (default 1)"},
         {"iterations", "iteration bound (default 8)"},
         {"step", "run a single step", true}}}},
      {"atoms", {"atoms up to a norm bound and the nonprime ones", {domain, {"bound", "norm bound (default 9)"}}}},
      {"split-check",
       {"test whether S splits the given primes",
        {domain, {"s", "generators of S [s1, ...]"}, {"primes", "primes [p1, ...]"}}}},
      {"lcm",
       {"lcm from a product refinement",
        {domain, {"a", "element a"}, {"b", "element b"}, {"multiples", "common multiples [m1, ...]"}}}},
      {"classify", {"sample atoms of a module and test primitivity", {domain, module, {"budget", "sample size (default 20)"}}}},
      {"paper-suite",
       {"replay the pinned fixture checks",
        {{"filter", "run checks whose name or group contains this"},
         {"fixtures", "fixture directory (overrides PSMOD_FIXTURE_DIR)"}}}}};
  return table;
}

std::string flag_name(const char* key) {
  std::string s = key;
  std::replace(s.begin(), s.end(), '_', '-');
  return "--" + s;
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{"Refinement engine for a*x = b*y over small test-bed domains"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print the JSON report instead of text");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : command_names()) {
    const auto& [help, opts] = spec().at(name);
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    subs[name] = sub;
    for (const auto& o : opts) {
      if (o.is_flag)
        sub->add_flag(flag_name(o.name), flags[name][o.name], o.help);
      else
        sub->add_option(flag_name(o.name), values[name][o.name], o.help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  std::string command;
  json args = json::object();
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    command = name;
    for (const auto& o : spec().at(name).second) {
      if (sub->count(flag_name(o.name)) == 0) continue;
      if (o.is_flag)
        args[o.name] = true;
      else
        args[o.name] = values[name][o.name];
    }
  }

  json out;
  int code = 0;
  try {
    out = run_command(command, args);
    code = exit_code(out);
  } catch (const std::exception& e) {
    out = error_report(command, e, &code);
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << render_human(out);
  return code;
}

}  // namespace psmod::cli
