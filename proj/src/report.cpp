#include "adicert/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace adicert {

std::string scenario_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json verdict_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& [n, m] : v.witnesses) w.push_back(Json::array({n, m}));
  Json j;
  j["kind"] = v.kind_str();
  j["depth"] = v.depth;
  j["witnesses"] = std::move(w);
  j["note"] = v.note;
  return j;
}

Json module_json(const FpModule& M) {
  Json rels = Json::array();
  for (const auto& row : M.rels()) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    rels.push_back(std::move(r));
  }
  Json j;
  j["ring"] = M.ring()->description();
  j["gens"] = M.gens();
  j["rels"] = std::move(rels);
  return j;
}

Json theorem_report_json(const TheoremReport& r) {
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json cj;
    cj["id"] = c.id;
    cj["verdict"] = verdict_json(c.verdict);
    conds.push_back(std::move(cj));
  }
  Json j;
  j["theorem"] = r.theorem;
  j["depth"] = r.depth;
  j["conditions"] = std::move(conds);
  j["discrepancy"] = r.discrepancy;
  j["note"] = r.note;
  return j;
}

Json profile_json(const CompletionProfile& p) {
  Json j;
  j["depth"] = p.depth;
  j["separated"] = verdict_json(p.separated);
  j["adically_complete"] = verdict_json(p.adically_complete);
  j["l0_complete"] = verdict_json(p.l0_complete);
  j["derived_complete"] = verdict_json(p.derived_complete);
  j["generator_evidence"] = p.generator_evidence;
  j["implications_ok"] = p.implications_ok;
  return j;
}

namespace {

bool is_verdict(const Json& j) {
  return j.is_object() && j.contains("kind") && j.contains("depth") && j.contains("witnesses");
}
bool is_module(const Json& j) {
  return j.is_object() && j.contains("gens") && j.contains("rels") && j.contains("ring");
}

std::string verdict_cell(const Json& v) {
  std::string k = v["kind"].get<std::string>();
  std::string glyph = k == "holds" ? "[ok]" : k == "fails_up_to_depth" ? "[NO]" : "[??]";
  std::string s = glyph + " " + k + " @" + std::to_string(v["depth"].get<int>());
  std::string note = v.value("note", std::string());
  if (!note.empty()) s += "  -- " + note;
  return s;
}

std::string module_cell(const Json& m) {
  std::ostringstream os;
  os << m["gens"].get<std::size_t>() << " gens, " << m["rels"].size() << " rels over "
     << m["ring"].get<std::string>();
  return os.str();
}

std::string scalar_cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const std::string& label, const Json& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_verdict(j)) {
    rows.emplace_back(label, verdict_cell(j));
    return;
  }
  if (is_module(j)) {
    rows.emplace_back(label, module_cell(j));
    return;
  }
  if (j.is_object()) {
    // condition rows {id|degree, verdict} print on one line
    if (j.size() == 2 && j.contains("verdict") &&
        (j.contains("id") || j.contains("degree"))) {
      std::string key = j.contains("id") ? j["id"].get<std::string>()
                                         : "degree " + j["degree"].dump();
      flatten(label.empty() ? key : label + "." + key, j["verdict"], rows);
      return;
    }
    for (const auto& [k, v] : j.items()) {
      std::string sub = label.empty() ? k : label + "." + k;
      flatten(sub, v, rows);
    }
    return;
  }
  if (j.is_array()) {
    bool scalars = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalars = false;
    if (scalars) {
      std::string joined;
      for (const auto& e : j) {
        if (!joined.empty()) joined += ", ";
        joined += scalar_cell(e);
      }
      rows.emplace_back(label, joined.empty() ? "(none)" : joined);
      return;
    }
    int idx = 0;
    for (const auto& e : j) {
      if (e.is_object() && e.size() == 2 && e.contains("verdict") &&
          (e.contains("id") || e.contains("degree"))) {
        flatten(label, e, rows); // picks up its own id/degree label
      } else {
        std::string sub;
        if (e.is_object() && e.contains("id"))
          sub = e["id"].get<std::string>();
        else if (e.is_object() && e.contains("degree"))
          sub = "degree " + e["degree"].dump();
        else
          sub = "#" + std::to_string(idx);
        flatten(label.empty() ? sub : label + "." + sub, e, rows);
      }
      ++idx;
    }
    return;
  }
  rows.emplace_back(label, scalar_cell(j));
}

} // namespace

std::string render_text(const Json& run_report) {
  std::ostringstream os;
  os << "adicert " << run_report.value("version", std::string())
     << "  scenario " << run_report.value("scenario", std::string())
     << "  hash " << run_report.value("scenario_hash", std::string()) << "\n";
  for (const auto& task : run_report.value("tasks", Json::array())) {
    os << "\n== task " << task["task"].get<std::string>();
    for (const auto& a : task.value("args", Json::array()))
      os << " " << a.get<std::string>();
    os << "  (depth " << task["depth"].get<int>() << ")\n";
    if (task["status"] == "error") {
      os << "  ERROR: " << task.value("error", std::string()) << "\n";
      continue;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", task.value("result", Json::object()), rows);
    std::size_t w = 0;
    for (const auto& [k, _] : rows) w = std::max(w, k.size());
    for (const auto& [k, v] : rows) {
      os << "  " << k;
      for (std::size_t i = k.size(); i < w + 2; ++i) os << ' ';
      os << v << "\n";
    }
  }
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f.good()) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

} // namespace adicert
