#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace tribo::cli;

int main(int argc, char** argv) {
  CLI::App app{"Abelian complexity, balance and numeration tools for the Tribonacci word"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::string out_path, json_path;
  std::size_t scan_cap = 0;
  app.add_option("--out", out_path, "Write data output to this file instead of stdout");
  app.add_option("--json", json_path, "Write a JSON summary or report to this file");
  app.add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  app.add_option("--seed", opts.seed, "Seed for randomized spot checks");
  app.add_option("--max-buffer", opts.max_buffer, "Largest word prefix to generate, in symbols")
      ->check(CLI::PositiveNumber);
  auto* cap_opt = app.add_option("--scan-cap", scan_cap, "Maximum window positions per saturation scan")
                      ->check(CLI::PositiveNumber);

  std::function<int(std::ostream&)> action;

  std::string word_spec = "tribonacci", suite = "paper";
  std::int64_t a = 0, b = 0, c = 0, d = 0;

  auto* generate = app.add_subcommand("generate", "Print a prefix of a fixed point");
  generate->add_option("word", word_spec, "tribonacci or mbonacci:<m>")->required();
  generate->add_option("length", a, "Prefix length")->required();
  generate->callback([&] { action = [&](std::ostream& o) { return cmd_generate(opts, word_spec, a, o, std::cerr); }; });

  auto* rho = app.add_subcommand("rho", "Abelian complexity CSV for a range of lengths");
  rho->add_option("word", word_spec)->required();
  rho->add_option("n_from", a)->required();
  rho->add_option("n_to", b)->required();
  rho->callback([&] { action = [&](std::ostream& o) { return cmd_rho(opts, word_spec, a, b, o, std::cerr); }; });

  auto* balance = app.add_subcommand("balance", "Per-letter imbalance profile for lengths 1..max_len");
  balance->add_option("word", word_spec)->required();
  balance->add_option("max_len", a)->required();
  balance->callback([&] { action = [&](std::ostream& o) { return cmd_balance(opts, word_spec, a, o, std::cerr); }; });

  auto* witness = app.add_subcommand("witness", "Shortest window pair with a given letter imbalance");
  witness->add_option("word", word_spec)->required();
  witness->add_option("letter", a)->required();
  witness->add_option("target_diff", b)->required();
  witness->add_option("max_len", c)->required();
  witness->add_option("scan_len", d)->required();
  witness->callback(
      [&] { action = [&](std::ostream& o) { return cmd_witness(opts, word_spec, a, b, c, d, o, std::cerr); }; });

  auto* discrepancy = app.add_subcommand("discrepancy", "Letter discrepancy of Tribonacci prefixes");
  discrepancy->add_option("letter", a)->required();
  discrepancy->add_option("n_max", b)->required();
  discrepancy->callback([&] { action = [&](std::ostream& o) { return cmd_discrepancy(opts, a, b, o, std::cerr); }; });

  auto* zeckendorf = app.add_subcommand("zeckendorf", "Tribonacci numeration digits, least significant first");
  zeckendorf->add_option("N", a)->required();
  zeckendorf->callback([&] { action = [&](std::ostream& o) { return cmd_zeckendorf(opts, a, o, std::cerr); }; });

  auto* constants = app.add_subcommand("constants", "Spectral constants of the Tribonacci matrix");
  constants->callback([&] { action = [&](std::ostream& o) { return cmd_constants(opts, o, std::cerr); }; });

  auto* special = app.add_subcommand("special", "Right special factors and rho for a range of n");
  special->add_option("n_from", a)->required();
  special->add_option("n_to", b)->required();
  special->callback([&] { action = [&](std::ostream& o) { return cmd_special(opts, a, b, o, std::cerr); }; });

  auto* verify = app.add_subcommand("verify", "Run a claim verification suite");
  verify->add_option("--suite", suite, "Suite name")->capture_default_str();
  verify->callback([&] { action = [&](std::ostream& o) { return cmd_verify(opts, suite, o, std::cerr); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!out_path.empty()) opts.out_path = out_path;
  if (!json_path.empty()) opts.json_path = json_path;
  if (cap_opt->count() > 0) opts.scan_cap = scan_cap;

  return run_guarded(std::cerr, [&] {
    if (!opts.out_path) return action(std::cout);
    std::ofstream file(*opts.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + *opts.out_path + " for writing");
    return action(file);
  });
}
