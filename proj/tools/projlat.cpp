#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "projlat/script/session.hpp"

namespace {

using namespace projlat::script;

int run_file(const std::string& path, bool json, const std::string& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  RunOptions opts;
  opts.json = json;
  if (!field.empty()) {
    try {
      opts.field = parse_field_choice(field);
    } catch (const projlat::Error& e) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
  }
  return run_session(buffer.str(), opts, std::cout, std::cerr);
}

int verify_finite(long long n) {
  try {
    const Json report = finite_verify_report(n);
    for (const auto& [key, value] : report.items()) std::cout << key << ": " << text_value(value) << "\n";
    return report.contains("failures") ? kExitSemantic : kExitOk;
  } catch (const projlat::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitSemantic;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projlat: graded modules, supports and Serre classes on Proj"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Execute a session file");
  std::string file;
  bool json = false;
  std::string field;
  run->add_option("file", file, "Session file")->required();
  run->add_flag("--json", json, "Emit one JSON object per statement");
  run->add_option("--field", field, "Override the coefficient field: QQ or GF:<p>");

  auto* verify = app.add_subcommand("verify", "Run the exhaustive finite-model checks");
  long long n = 0;
  verify->add_option("--finite", n, "Number of variables, 1 to 4")->required();

  auto* repl = app.add_subcommand("repl", "Interactive session");
  bool repl_json = false;
  repl->add_flag("--json", repl_json, "Emit JSON objects instead of text");

  CLI11_PARSE(app, argc, argv);

  if (*run) return run_file(file, json, field);
  if (*verify) return verify_finite(n);
  if (*repl) {
    RunOptions opts;
    opts.json = repl_json;
    run_repl(std::cin, std::cout, opts, isatty(STDIN_FILENO) != 0);
    return kExitOk;
  }
  return kExitUsage;
}
