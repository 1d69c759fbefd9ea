#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "adicert/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string stem_of(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"adicert: certified adic-completion diagnostics"};
  std::string scenario_path, gallery_name, gallery_dir = "gallery";
  std::string format = "text", out_path;
  int depth = 0;
  bool strict = false;

  auto* s = app.add_option("--scenario", scenario_path, "Path to a scenario file");
  auto* g = app.add_option("--gallery", gallery_name, "Name of a shipped gallery scenario");
  app.add_option("--gallery-dir", gallery_dir, "Directory holding the gallery scenarios");
  app.add_option("--depth", depth, "Global depth override (>= 1)");
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write the report to this path instead of stdout");
  app.add_flag("--strict", strict, "Exit 2 on certified failures; abort on task errors");
  s->excludes(g);

  CLI11_PARSE(app, argc, argv);

  try {
    std::string path, name;
    if (!scenario_path.empty()) {
      path = scenario_path;
      name = stem_of(scenario_path);
    } else if (!gallery_name.empty()) {
      path = gallery_dir + "/" + gallery_name + ".scenario";
      name = gallery_name;
    } else {
      std::cerr << "error: one of --scenario or --gallery is required\n";
      return 1;
    }

    adicert::Scenario sc;
    try {
      sc = adicert::parse_scenario(read_file(path), name);
    } catch (const adicert::ScenarioError& e) {
      std::cerr << "parse error in " << path << ": " << e.what() << "\n";
      return 1;
    }

    adicert::RunOptions opt;
    opt.depth_override = depth;
    opt.strict = strict;
    auto outcome = adicert::run_scenario(sc, opt);

    std::string rendered = format == "json" ? outcome.report.dump(2) + "\n"
                                            : adicert::render_text(outcome.report);
    if (out_path.empty())
      std::cout << rendered;
    else
      adicert::write_file_atomic(out_path, rendered);
    return outcome.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
