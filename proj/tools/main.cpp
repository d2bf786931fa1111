#include <iostream>

#include <CLI11.hpp>

#include "logdmod/cli.hpp"
#include "logdmod/errors.hpp"
#include "logdmod/parser.hpp"

using namespace logdmod;

namespace {

void add_engine_options(CLI::App* cmd, std::string& order, int& kmax, int& bound) {
  cmd->add_option("--order", order, "term order for Weyl Groebner bases")
      ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
  cmd->add_option("--kmax", kmax, "largest jet order for the Ext^2 probe")->check(CLI::PositiveNumber);
  cmd->add_option("--degree-bound", bound, "degree bound for the Saito basis search")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logarithmic D-module checks for free divisors"};
  app.set_version_flag("--version", engine_version());
  app.require_subcommand(1);

  std::string order = "grevlex", format = "text";
  int kmax = 10, bound = 2;

  auto* run = app.add_subcommand("run", "analyze one divisor");
  std::string f, vars = "x,y", symbol = "f";
  std::vector<std::string> basis;
  run->add_option("--f", f, "divisor, e.g. \"x^2 - y^3\"")->required();
  run->add_option("--vars", vars, "comma-separated variables");
  run->add_option("--symbol", symbol, "name of the divisor in text output");
  run->add_option("--basis", basis, "Saito basis to adopt after verification (one operator per value)");
  run->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  add_engine_options(run, order, kmax, bound);

  auto* catalog = app.add_subcommand("catalog", "run every entry of a JSON-lines catalog");
  std::string path, cache, out;
  unsigned jobs = 1;
  catalog->add_option("--path", path, "catalog file")->required();
  catalog->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  catalog->add_option("--cache", cache, "cache directory for structured reports");
  catalog->add_option("--out", out, "directory for one report per entry");
  catalog->add_option("--format", format, "format of the written reports")
      ->check(CLI::IsMember({"text", "structured"}));
  add_engine_options(catalog, order, kmax, bound);

  auto* verify = app.add_subcommand("verify-paper", "run the built-in golden suite");
  add_engine_options(verify, order, kmax, bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    RunConfig config;
    config.order = parse_order_kind(order);
    config.k_max = kmax;
    config.degree_bound = bound;
    config.format = parse_output_format(format);

    if (*run) {
      CatalogEntry entry;
      entry.name = "input";
      entry.vars = parse_variable_list(vars);
      entry.f = f;
      entry.symbol = symbol;
      entry.basis = basis;
      config.validate();
      CurveReport r = analyze_divisor(parse_polynomial(f, entry.vars), entry.vars, entry.name,
                                      options_for(config, entry));
      std::cout << report_emit(r, config.format);
      return kExitOk;
    }
    if (*catalog) {
      config.jobs = jobs;
      config.cache_dir = cache;
      config.report_dir = out;
      CatalogSummary s = run_catalog(path, config);
      for (const std::string& w : s.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << summary_table(s);
      return s.exit_code();
    }
    return verify_golden(std::cout, config);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInconsistent;
  }
}
