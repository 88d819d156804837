#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "germforge/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using germforge::cli::Invocation;
  CLI::App app{"germforge: invariants of function germs relative to an ideal"};
  std::string command, file;
  app.add_option("command", command, "codim, tangent, theta, primitive, versal-check, versal-build, determinacy, locus, "
                                     "classify, morse, split, conserve, hilbert, jet-dump")
      ->required();
  app.add_option("file", file, "problem file, or - for standard input")->required();

  // value options, recorded only when given
  const std::vector<std::pair<std::string, std::string>> valued = {
      {"order", "ds (local, default) or dp (global)"},
      {"trunc", "truncation degree for primitive, largest m for hilbert"},
      {"theta-mode", "direct or via-subideal"},
      {"subideal", "ideal I' used by --theta-mode via-subideal"},
      {"method", "jet, oracle or both"},
      {"seeds", "comma-separated seeds for the oracle"},
      {"degree-bound", "degree bound for oracle deformations (0: automatic)"},
      {"trials", "number of conservation trials"},
      {"jet-order", "jet order k for jet-dump"},
      {"ideal", "name of the ideal to use"},
      {"poly", "name of the polynomial to use"},
      {"unfolding", "name of the unfolding to use"},
  };
  std::map<std::string, std::string> values;
  for (const auto& [name, help] : valued) app.add_option("--" + name, values[name], help);
  bool assume_reduced = false, saturate = false, timing = false;
  app.add_flag("--assume-reduced", assume_reduced, "take J1 as reduced without proof");
  app.add_flag("--saturate", saturate, "use (J1 : J2^oo) for the Morse component");
  app.add_flag("--timing", timing, "include wall time in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << germforge::cli::usage_error(command, e.what()).document;
    return 2;
  }

  Invocation inv;
  inv.command = command;
  for (const auto& [name, help] : valued)
    if (app.get_option("--" + name)->count() > 0) inv.flags[name] = values[name];
  if (assume_reduced) inv.flags["assume-reduced"] = "true";
  if (saturate) inv.flags["saturate"] = "true";
  if (timing) inv.flags["timing"] = "true";
  if (const char* env = std::getenv("GERMFORGE_SEED")) inv.env_seeds = env;

  try {
    inv.input = read_input(file);
  } catch (const std::exception& e) {
    std::cout << germforge::cli::usage_error(command, e.what()).document;
    return 2;
  }
  auto out = germforge::cli::run(inv);
  std::cout << out.document;
  return out.exit_code;
}
