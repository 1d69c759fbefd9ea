#include "adicert/runner.hpp"

namespace adicert {
namespace {

Json wpr_json(const RingPtr& ring, const std::vector<RingElement>& xs, int depth) {
  Json degs = Json::array();
  for (const auto& d : wpr_probe(ring, xs, depth)) {
    Json e;
    e["degree"] = d.degree;
    e["verdict"] = verdict_json(d.verdict);
    degs.push_back(std::move(e));
  }
  Json j;
  j["degrees"] = std::move(degs);
  return j;
}

Json koszul_dual_json(const RingPtr& ring, const std::vector<RingElement>& xs, int depth) {
  auto d = dual_koszul(KoszulSpec::make(ring, xs, 1));
  int k = static_cast<int>(xs.size());
  bool ok = true;
  for (int n = d.hom.cx.lo(); n <= d.hom.cx.hi(); ++n)
    if (!is_isomorphism(d.iso.comp(n))) ok = false;
  Json j;
  j["self_dual"] = verdict_json(ok ? Verdict::holds(depth, {}, "degreewise iso onto the " +
                                                                   std::to_string(k) +
                                                                   "-fold shift")
                                   : Verdict::fails(depth, "no degreewise iso found"));
  j["dual_degrees"] = Json::array({d.hom.cx.lo(), d.hom.cx.hi()});
  return j;
}

Json koszul_homology_json(const RingPtr& ring, const std::vector<RingElement>& xs) {
  auto K = koszul_complex(KoszulSpec::make(ring, xs, 1));
  Json hs = Json::array();
  for (int d = K.lo(); d <= K.hi(); ++d) {
    Json e;
    e["degree"] = d;
    e["homology"] = module_json(homology_module(K, d));
    hs.push_back(std::move(e));
  }
  Json j;
  j["degrees"] = std::move(hs);
  return j;
}

Json gm_json(const FpModule& M, const Ideal& I, int depth) {
  Json j;
  auto r0 = l_functor(M, I, 0, depth);
  j["h0_pro_iso_adic"] = verdict_json(r0.verdict);
  if (r0.has_value) j["l0_value"] = module_json(r0.value);
  Json higher = Json::array();
  for (int i = 1; i <= static_cast<int>(I.gens.size()); ++i) {
    Json e;
    e["degree"] = i;
    e["verdict"] = verdict_json(l_functor(M, I, i, depth).verdict);
    higher.push_back(std::move(e));
  }
  j["higher_pro_zero"] = std::move(higher);
  return j;
}

Json tor_ext_json(const FpModule& M, const FpModule& N, int depth) {
  int bound = std::min(depth, M.ring()->resolution_bound());
  auto d = derived_binary(M, N, bound);
  Json tor = Json::array(), ext = Json::array();
  for (const auto& T : d.tor) tor.push_back(module_json(T));
  for (const auto& E : d.ext) ext.push_back(module_json(E));
  Json j;
  j["tor"] = std::move(tor);
  j["ext"] = std::move(ext);
  return j;
}

Json completed_tensor_json(const FpModule& M, const FpModule& N, const Ideal& I, int depth) {
  auto ct = completed_tensor_tower(M, N, I, depth);
  Json stages = Json::array();
  for (int n = 1; n <= depth; ++n) stages.push_back(module_json(ct.tower.stage(n)));
  Json j;
  j["comparison"] = verdict_json(ct.comparison);
  j["stages"] = std::move(stages);
  return j;
}

Json run_task(const ScenarioTask& t, int depth) {
  if (t.kind == "profile")
    return profile_json(completeness_profile(t.mods[0], t.ideals[0], depth));
  if (t.kind == "six_conditions")
    return theorem_report_json(t.cxs.empty()
                                   ? six_conditions(t.mods[0], t.ideals[0], depth)
                                   : six_conditions_complex(t.cxs[0], t.ideals[0], depth));
  if (t.kind == "factorization")
    return theorem_report_json(factorization_check(t.mods[0], t.ideals[0], depth));
  if (t.kind == "spectral_edge")
    return theorem_report_json(spectral_edge(t.cxs[0], t.ideals[0], depth));
  if (t.kind == "base_change")
    return theorem_report_json(base_change_suite(t.rmaps[0], t.ideals[0], t.ideals[1], depth));
  if (t.kind == "radical_invariance")
    return theorem_report_json(radical_invariance_check(t.mods[0], t.lists[0], t.lists[1], depth));
  if (t.kind == "wpr") return wpr_json(t.rings[0], t.lists[0], depth);
  if (t.kind == "koszul_dual") return koszul_dual_json(t.rings[0], t.lists[0], depth);
  if (t.kind == "koszul_homology") return koszul_homology_json(t.rings[0], t.lists[0]);
  if (t.kind == "gm") return gm_json(t.mods[0], t.ideals[0], depth);
  if (t.kind == "tor_ext") return tor_ext_json(t.mods[0], t.mods[1], depth);
  if (t.kind == "completed_tensor")
    return completed_tensor_json(t.mods[0], t.mods[1], t.ideals[0], depth);
  throw std::logic_error("unhandled task kind '" + t.kind + "'");
}

void scan_failures(const Json& j, bool& any_fail) {
  if (j.is_object()) {
    if (j.contains("kind") && j["kind"] == "fails_up_to_depth") any_fail = true;
    if (j.contains("discrepancy") && j["discrepancy"].is_boolean() &&
        j["discrepancy"].get<bool>())
      any_fail = true;
    for (const auto& [k, v] : j.items()) scan_failures(v, any_fail);
  } else if (j.is_array()) {
    for (const auto& v : j) scan_failures(v, any_fail);
  }
}

} // namespace

RunOutcome run_scenario(const Scenario& sc, const RunOptions& opt) {
  RunOutcome out;
  out.report["schema_version"] = kSchemaVersion;
  out.report["tool"] = "adicert";
  out.report["version"] = kToolVersion;
  out.report["scenario"] = sc.name;
  out.report["scenario_hash"] = scenario_hash(sc.source_text);
  Json tasks = Json::array();
  bool any_error = false;
  for (const auto& t : sc.tasks) {
    int depth = opt.depth_override > 0 ? opt.depth_override : t.depth;
    Json tj;
    tj["task"] = t.kind;
    tj["args"] = t.arg_names;
    tj["depth"] = depth;
    tj["line"] = t.line;
    try {
      Json result = run_task(t, depth);
      tj["status"] = "ok";
      tj["result"] = std::move(result);
    } catch (const std::exception& e) {
      any_error = true;
      tj["status"] = "error";
      tj["error"] = e.what();
    }
    bool aborted = opt.strict && tj["status"] == "error";
    tasks.push_back(std::move(tj));
    if (aborted) break;
  }
  out.report["tasks"] = std::move(tasks);
  bool any_fail = false;
  scan_failures(out.report["tasks"], any_fail);
  out.exit_code = any_error ? 1 : (opt.strict && any_fail ? 2 : 0);
  return out;
}

} // namespace adicert
