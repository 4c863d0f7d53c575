// wcit: Hodge numbers and infinitesimal Torelli for weighted complete
// intersections.
//
//   wcit check   --input X.json
//   wcit hodge   --input X.json [--json]
//   wcit torelli --input X.json [--field fp:65537] [--degree-bound N]
//   wcit fano    --f "x0^4 + ... + x4^4"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wcit/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wcit::cli::SpecError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge numbers and infinitesimal Torelli for weighted complete intersections"};
  app.require_subcommand(1);

  wcit::cli::Options opt;
  std::string input_path, field;
  long degree_bound = -1;
  bool as_json = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", field, "q or fp:PRIME (overrides the input document)");
    sub->add_flag("--json", as_json, "emit the report as JSON");
    sub->add_option("--degree-bound", degree_bound, "truncate the Groebner basis at this second degree")
        ->check(CLI::NonNegativeNumber);
  };

  for (const char* name : {"check", "hodge", "torelli"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input_path, "variety document (JSON), '-' for stdin")->required();
    common(sub);
    if (std::string(name) != "check") sub->add_flag("--force", opt.force, "proceed without quasi-smoothness");
  }
  auto* fano = app.add_subcommand("fano", "double cover of a quadric threefold branched in a quartic");
  fano->add_option("--f", opt.f_text, "quartic in x0..x4")->required();
  std::string g_text;
  fano->add_option("--g", g_text, "quadric in x0..x4 (default x0^2 + ... + x4^2)");
  common(fano);

  CLI11_PARSE(app, argc, argv);

  opt.command = app.get_subcommands().front()->get_name();
  if (!field.empty()) opt.field = field;
  if (degree_bound >= 0) opt.degree_bound = degree_bound;
  if (!g_text.empty()) opt.g_text = g_text;
  if (opt.command != "fano") {
    try {
      opt.input = slurp(input_path);
    } catch (const wcit::cli::SpecError& e) {
      std::cerr << "wcit: " << e.what() << '\n';
      return wcit::cli::kExitBadInput;
    }
  }

  auto result = wcit::cli::run_command(opt);
  if (as_json) {
    std::cout << result.document.dump(2) << '\n';
  } else {
    std::cout << wcit::cli::render_text(result.document);
  }
  if (result.document.contains("error") && !as_json)
    std::cerr << "wcit: " << result.document["error"].get<std::string>() << '\n';
  return result.exit_code;
}
