#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "phantom/cli/commands.hpp"
#include "phantom/cli/corpus.hpp"
#include "phantom/ring/errors.hpp"

using namespace phantom;
using namespace phantom::cli;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phantom: Frobenius closures, phantom homology and phantom depth over F_p"};
  std::string command, problem, cache_dir, filter;
  bool json = false, no_cache = false, no_stats = false;
  BoundOverrides ov;

  app.add_option("command", command, "Operation to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("problem", problem, "Problem file (JSON), or - for stdin");
  app.add_option("--e-max", ov.e_max, "Largest Frobenius level scanned");
  app.add_option("--t-max", ov.t_max, "Largest power tried by phantom-seq");
  app.add_option("--degree-budget", ov.degree_budget, "Degree cap for Groebner computations");
  app.add_option("--cache-dir", cache_dir, "Directory for the on-disk Groebner cache")->envname("PHANTOM_CACHE_DIR");
  app.add_flag("--no-cache", no_cache, "Disable the Groebner cache");
  app.add_option("--filter", filter, "corpus: category or group to run");
  app.add_flag("--json", json, "Print the report as JSON");
  app.add_flag("--no-stats", no_stats, "Omit timing and cache counters");
  CLI11_PARSE(app, argc, argv);

  if (no_cache) GroebnerCache::global().set_enabled(false);
  if (!cache_dir.empty()) GroebnerCache::global().set_directory(cache_dir);

  RunReport rep;
  if (command == "corpus") {
    try {
      rep = corpus_command(filter, ov);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
  } else {
    if (problem.empty()) {
      std::cerr << "error: " << command << " needs a problem file\n";
      return kInputError;
    }
    try {
      rep = run_guarded(command, slurp(problem), ov);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInputError;
    }
  }

  Json out = rep.to_json(!no_stats);
  if (json) {
    std::cout << out.dump(2) << "\n";
  } else {
    if (rep.result.contains("error")) {
      std::cerr << "error (" << rep.result["error"]["kind"].get<std::string>()
                << "): " << rep.result["error"]["message"].get<std::string>() << "\n";
    } else {
      std::cout << render_text(rep.result);
      if (!no_stats) std::cout << "wall_ms: " << rep.wall_ms << "\n";
    }
  }
  return rep.exit_code;
}
