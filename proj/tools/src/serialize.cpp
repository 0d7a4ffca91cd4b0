#include "psmod_cli/serialize.hpp"

namespace psmod::cli {

namespace {

json vec_json(const Module& m, const Vector& v) { return format_vector(element_domain(m), v); }

}  // namespace

json to_json(const OIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(ideal.order().to_string(g));
  json basis = json::array();
  for (const auto& row : ideal.basis()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    basis.push_back(std::move(r));
  }
  json out{{"generators", gens}, {"hnf_basis", basis}, {"text", format_ideal(ideal)}};
  if (!ideal.is_zero()) out["norm"] = to_string(ideal_norm(ideal));
  return out;
}

json to_json(const Instance& inst) {
  const Domain& s = inst.scalars;
  return {{"scalars", s.to_string()},
          {"module", format_module(inst.module)},
          {"a", s.format(inst.a)},
          {"b", s.format(inst.b)},
          {"x", vec_json(inst.module, inst.x)},
          {"y", vec_json(inst.module, inst.y)}};
}

json to_json(const Instance& inst, const Refinement& r) {
  if (!verify(inst, r))
    throw Error(ErrorKind::Internal, "refinement table does not verify against the instance");
  const Domain& s = inst.scalars;
  return {{"c", s.format(r.c)},
          {"d", s.format(r.d)},
          {"e", s.format(r.e)},
          {"z", vec_json(inst.module, r.z)},
          {"checks", {"a = c*e", "b = c*d", "x = d*z", "y = e*z"}},
          {"verified", true}};
}

json to_json(const Instance& inst, const Certificate& cert) {
  const Domain& s = inst.scalars;
  json out{{"instance", to_json(inst)}, {"outcome", std::string(to_string(cert.outcome))}};
  if (cert.refinement) out["refinement"] = to_json(inst, *cert.refinement);
  json cands = json::array();
  for (const auto& c : cert.candidates)
    cands.push_back({{"t", s.format(c.t)}, {"accepted", c.accepted}, {"reason", c.reason}});
  out["candidates"] = std::move(cands);
  json reds = json::array();
  for (const auto& r : cert.reductions)
    reds.push_back({{"pair", std::string(to_string(r.kind))}, {"t", s.format(r.t)}});
  out["reductions"] = std::move(reds);
  if (!cert.bounds.empty()) out["bounds"] = cert.bounds;
  return out;
}

json to_json(const ClassifyReport& report, const Domain& d) {
  json wit = json::array();
  for (const auto& w : report.witnesses)
    wit.push_back({{"element", format_vector(d, w.element)},
                   {"atom", format_vector(d, w.atom)},
                   {"cofactor", d.format(w.cofactor)},
                   {"atom_primitive", w.atom_primitive}});
  return {{"atomic", std::string(to_string(report.atomic))},
          {"factorable", std::string(to_string(report.factorable))},
          {"sampled", report.sampled},
          {"witnesses", std::move(wit)}};
}

}  // namespace psmod::cli
