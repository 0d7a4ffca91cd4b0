#include "psmod_cli/cli.hpp"
#include "psmod_cli/serialize.hpp"

#include <functional>
#include <algorithm>
#include <map>

namespace psmod::cli {

namespace {

std::string arg(const json& args, const std::string& key) {
  if (!args.contains(key)) throw Error(ErrorKind::InvalidArgument, "missing --" + key);
  const json& v = args.at(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool flag(const json& args, const std::string& key) {
  if (!args.contains(key)) return false;
  const json& v = args.at(key);
  return v.is_boolean() ? v.get<bool>() : arg(args, key) == "true";
}

long number(const json& args, const std::string& key, long fallback) {
  if (!args.contains(key)) return fallback;
  const std::string s = arg(args, key);
  try {
    size_t used = 0;
    const long n = std::stol(s, &used);
    if (used == s.size()) return n;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "--" + key + " expects an integer, got '" + s + "'");
}

/// Splits "[v1, v2, ...]" at top-level commas.
std::vector<std::string> split_list(const std::string& text) {
  const auto open = text.find('[');
  const auto close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw Error(ErrorKind::InvalidArgument, "expected a bracketed list, got '" + text + "'");
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (size_t i = open + 1; i < close; ++i) {
    const char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (cur.find_first_not_of(" \t\n") != std::string::npos) out.push_back(cur);
  return out;
}

std::vector<OrderElement> order_list(const Domain& d, const std::string& text) {
  if (!d.is_order()) throw Error(ErrorKind::DomainMismatch, "expected Z or Z[w,-m], got " + d.to_string());
  std::vector<OrderElement> out;
  for (const auto& e : parse_element_list(d, text)) out.push_back(e.order_element());
  return out;
}

const Order& order_of(const Domain& d) {
  if (!d.is_order())
    throw Error(ErrorKind::DomainMismatch, "expected Z or Z[w,-m], got " + d.to_string());
  return d.order();
}

json report(const std::string& command, const std::string& status) {
  return {{"schema", 1}, {"command", command}, {"status", status}};
}

Instance read_instance(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  Module m = parse_module(arg(args, "module"), d);
  if (args.contains("summand")) m = direct_sum(m, parse_module(arg(args, "summand"), d));
  const Domain& ed = element_domain(m);
  return make_instance(d, m, parse_element(d, arg(args, "a")), parse_element(d, arg(args, "b")),
                       parse_vector(ed, arg(args, "x")), parse_vector(ed, arg(args, "y")));
}

json cmd_refine(const json& args) {
  const Instance inst = read_instance(args);
  const std::string mode = args.contains("lift_through") ? "lift"
                           : args.contains("summand")    ? "componentwise"
                           : flag(args, "fast_path")     ? "fast_path"
                                                         : "engine";
  if (mode == "lift") {
    const auto s = order_list(inst.scalars, arg(args, "lift_through"));
    const Instance local = localize(inst, s);
    const Certificate over_as = find_refinement(local);
    json out = report("refine", std::string(to_string(over_as.outcome)));
    out["mode"] = mode;
    out["localized"] = to_json(local, over_as);
    if (over_as.outcome != Outcome::Found) return out;
    try {
      Certificate lifted{Outcome::Found, nagata_lift(*over_as.refinement, inst, s), {}, {}, {}};
      out.update(to_json(inst, lifted));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPrimal) throw;
      out["status"] = "unknown";
      out["outcome"] = "lift_failed";
      out["instance"] = to_json(inst);
      out["error"] = {{"kind", "not_primal"}, {"message", e.what()}};
    }
    return out;
  }
  Certificate cert;
  if (mode == "componentwise") {
    const Domain d = parse_domain(arg(args, "domain"));
    cert = direct_sum_refinement(inst, parse_module(arg(args, "module"), d),
                                 parse_module(arg(args, "summand"), d));
  } else if (mode == "fast_path") {
    cert = ufd_fast_path(inst);
  } else {
    FindOptions opts;
    opts.reduce = flag(args, "reduce");
    opts.reduce_options.cross_cancel = flag(args, "cross_cancel");
    opts.descending = flag(args, "descending");
    cert = find_refinement(inst, opts);
  }
  json out = report("refine", std::string(to_string(cert.outcome)));
  out["mode"] = mode;
  out.update(to_json(inst, cert));
  return out;
}

json cmd_reduce(const json& args) {
  const Instance inst = read_instance(args);
  const Reduced r = reduce_instance(inst, ReduceOptions{flag(args, "cross_cancel")});
  json log = json::array();
  for (const auto& step : r.log)
    log.push_back({{"pair", std::string(to_string(step.kind))}, {"t", inst.scalars.format(step.t)}});
  json out = report("reduce", "verified");
  out["instance"] = to_json(inst);
  out["reduced"] = to_json(r.instance);
  out["log"] = std::move(log);
  return out;
}

json cmd_colon(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const Module m = parse_module(arg(args, "module"), d);
  const Element a = parse_element(d, arg(args, "a"));
  const Vector x = parse_vector(element_domain(m), arg(args, "x"));
  const OIdeal ideal = colon_ideal(a, x, m);
  json out = report("colon", "verified");
  out["ideal"] = to_json(ideal);
  const auto gen = is_principal(ideal);
  out["principal"] = gen ? json(ideal.order().to_string(*gen)) : json(nullptr);
  out["contains_one"] = ideal.is_unit_ideal();
  return out;
}

json cmd_principal(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const OIdeal ideal = parse_ideal(d, arg(args, "ideal"));
  const auto gen = is_principal(ideal);
  json out = report("principal", gen ? "verified" : "refuted");
  out["ideal"] = to_json(ideal);
  out["generator"] = gen ? json(ideal.order().to_string(*gen)) : json(nullptr);
  return out;
}

json cmd_saturate(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const OIdeal ideal = parse_ideal(d, arg(args, "ideal"));
  const OrderElement s = parse_element(d, arg(args, "s")).order_element();
  const OIdeal sat = saturation(ideal, s);
  json out = report("saturate", "verified");
  out["ideal"] = to_json(ideal);
  out["saturation"] = to_json(sat);
  out["unchanged"] = sat == ideal;
  return out;
}

json cmd_dm(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const Order& o = order_of(d);
  const OPoly f = parse_opoly(d, arg(args, "f"));
  const OPoly g = parse_opoly(d, arg(args, "g"));
  const DedekindMertens r = dedekind_mertens_exponent(o, f, g);
  json out = report("dm-exponent", "verified");
  out["f"] = format_opoly(o, f);
  out["g"] = format_opoly(o, g);
  out["fg"] = format_opoly(o, poly_mul(o, f, g));
  out["m"] = r.m;
  out["lhs"] = to_json(r.lhs);
  out["rhs"] = to_json(r.rhs);
  out["predecessor_fails"] = r.m >= 2 ? json(r.predecessor_fails) : json(nullptr);
  return out;
}

json cmd_envelope(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const Module m = parse_module(arg(args, "module"), d);
  std::vector<Vector> gens;
  for (const auto& v : split_list(arg(args, "gens"))) gens.push_back(parse_vector(element_domain(m), v));
  const Submodule n(m, gens);
  EnvelopeBounds bounds;
  bounds.norm_bound = Integer(number(args, "norm_bound", 9));
  bounds.height = number(args, "height", 1);
  bounds.max_iterations = static_cast<unsigned>(number(args, "iterations", 8));
  const Domain& ed = element_domain(m);
  auto gens_json = [&ed](const Submodule& s) {
    json g = json::array();
    for (const auto& v : s.generators()) g.push_back(format_vector(ed, v));
    return g;
  };
  const Domain& a_dom = scalar_domain(m);
  if (flag(args, "step")) {
    const EnvelopeStep step = ps_envelope_step(n, bounds);
    json adj = json::array();
    for (const auto& ad : step.adjoined)
      adj.push_back({{"a", a_dom.format(ad.a)},
                     {"b", a_dom.format(ad.b)},
                     {"x", format_vector(ed, ad.x)},
                     {"quotient", format_vector(ed, ad.quotient)}});
    json out = report("envelope", step.searched ? "verified" : "unknown");
    out["generators"] = gens_json(step.module);
    out["adjoined"] = std::move(adj);
    out["searched"] = step.searched;
    return out;
  }
  const Envelope env = ps_envelope(n, bounds);
  json out = report("envelope", env.stabilized ? "verified" : "unknown");
  out["generators"] = gens_json(env.module);
  out["stabilized"] = env.stabilized;
  out["iterations"] = env.iterations;
  out["equals_input"] = env.module == n;
  return out;
}

json cmd_atoms(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const NonprimeAtomReport r = nonprime_atom_set(d, Integer(number(args, "bound", 9)));
  const Order& o = d.order();
  json atoms = json::array();
  for (const auto& a : r.atoms) atoms.push_back({{"atom", o.to_string(a.atom)}, {"prime", a.prime}});
  json set = json::array();
  for (const auto& g : r.set.generators) set.push_back(o.to_string(g));
  json out = report("atoms", "verified");
  out["atoms"] = std::move(atoms);
  out["nonprime"] = std::move(set);
  return out;
}

json cmd_split(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const MultiplicativeSet s{d, order_list(d, arg(args, "s")), false};
  const auto verdicts = splitting_check(s, order_list(d, arg(args, "primes")));
  bool all = true;
  json rows = json::array();
  for (const auto& v : verdicts) {
    all = all && v.pass;
    rows.push_back({{"p", d.order().to_string(v.p)}, {"pass", v.pass}, {"saturation", to_json(v.saturated)}});
  }
  json out = report("split-check", all ? "verified" : "refuted");
  out["verdicts"] = std::move(rows);
  return out;
}

json cmd_lcm(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const Element l = lcm_via_product_refinement(d, parse_element(d, arg(args, "a")),
                                               parse_element(d, arg(args, "b")),
                                               parse_element_list(d, arg(args, "multiples")));
  json out = report("lcm", "verified");
  out["lcm"] = d.format(l);
  return out;
}

json cmd_classify(const json& args) {
  const Domain d = parse_domain(arg(args, "domain"));
  const Module m = parse_module(arg(args, "module"), d);
  const auto* fg = std::get_if<FgModule>(&m);
  if (!fg) throw Error(ErrorKind::Unsupported, "classification samples plain f.g. modules only");
  const ClassifyReport r = classify_module_sample(*fg, static_cast<size_t>(number(args, "budget", 20)));
  json out = report("classify", r.factorable == Verdict::Refuted ? "refuted" : "verified");
  out["module"] = format_module(m);
  out.update(to_json(r, fg->domain()));
  return out;
}

using Handler = std::function<json(const json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"refine", cmd_refine},     {"reduce", cmd_reduce},       {"colon", cmd_colon},
      {"principal", cmd_principal}, {"saturate", cmd_saturate}, {"dm-exponent", cmd_dm},
      {"envelope", cmd_envelope}, {"atoms", cmd_atoms},         {"split-check", cmd_split},
      {"lcm", cmd_lcm},           {"classify", cmd_classify},   {"paper-suite", run_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"refine",   "reduce",      "colon", "principal",
                                              "saturate", "dm-exponent", "envelope", "atoms",
                                              "split-check", "lcm",      "classify", "paper-suite"};
  return names;
}

json run_command(const std::string& command, const json& args) {
  const auto& table = handlers();
  const auto it = table.find(command);
  if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "unknown command '" + command + "'");
  return it->second(args);
}

int exit_code(const json& report) {
  const std::string status = report.value("status", "");
  if (status == "verified" || status == "found") return kVerified;
  if (status == "refuted" || status == "not_refinable") return kRefuted;
  if (status == "unknown") return kUnknown;
  return kUsage;
}

json error_report(const std::string& command, const std::exception& e, int* code) {
  json err{{"message", e.what()}};
  int c = kUsage;
  std::string status = "error";
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  if (const auto* le = dynamic_cast<const Error*>(&e)) {
    err["kind"] = std::string(to_string(le->kind()));
    switch (le->kind()) {
      case ErrorKind::Unsupported:
      case ErrorKind::UnsupportedEnumeration:
      case ErrorKind::Internal:
        c = kUnknown;
        status = "unknown";
        break;
      case ErrorKind::NotPrimal:
        c = kRefuted;
        status = "refuted";
        break;
      default:
        break;
    }
  } else {
    err["kind"] = "internal";
    c = kUnknown;
    status = "unknown";
  }
  if (code) *code = c;
  json out = report(command, status);
  out["error"] = std::move(err);
  return out;
}

std::string render_human(const json& report) {
  std::string out;
  std::function<void(const json&, const std::string&)> walk = [&](const json& j, const std::string& pad) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      const std::string key = j.is_object() ? it.key() + ":" : "-";
      const bool flat_array =
          v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
      if (v.is_object() || (v.is_array() && !flat_array)) {
        out += pad + key + "\n";
        walk(v, pad + "  ");
        continue;
      }
      std::string text;
      if (flat_array) {
        for (const auto& e : v) text += (text.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
        text = "[" + text + "]";
      } else {
        text = v.is_string() ? v.get<std::string>() : v.dump();
      }
      out += pad + key + " " + text + "\n";
    }
  };
  walk(report, "");
  return out;
}

}  // namespace psmod::cli
