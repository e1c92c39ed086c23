#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spinclass/report.hpp"

using namespace spinclass::report;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of spin bundle computations over CP^3 and the RP^7 embedding certificate"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  RunOptions opts;
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opts.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--samples", opts.samples, "Samples per randomized check")->capture_default_str();

  int n = 0;
  auto* clifford = app.add_subcommand("clifford", "Irreducible representations and even-part checks for Cl_n");
  clifford->add_option("n", n, "Clifford dimension (1..12)")->required();

  std::string indices;
  auto* stabilizer = app.add_subcommand("stabilizer", "Stabilizer of a set of omega forms");
  stabilizer->add_option("indices", indices, "Comma-separated indices in 1..6")->required();

  auto* lemma = app.add_subcommand("lemma-cohomo", "Characteristic class identities for Spin(n), n = 3..6");
  lemma->add_option("n", n, "Rank")->required();
  lemma->add_flag("--printed-spin6-weights", opts.printed_spin6_weights, "Use the printed Spin6 weight list");

  long p1 = 0;
  std::optional<long> euler;
  auto* classify = app.add_subcommand("classify", "Count Spin(n)-bundles over CP^3 with given classes");
  classify->add_option("n", n, "Rank")->required();
  classify->add_option("p1", p1, "Coefficient of x^2 in p1")->required();
  classify->add_option("--euler", euler, "Euler class coefficient (x^2 for n = 4, x^3 for n = 6)");

  std::string tamper = "none";
  auto* embed = app.add_subcommand("embed", "Embedding certificate for RP^7 in R^11");
  embed->add_option("--tamper", tamper, "Replace E by the other candidate")->check(CLI::IsMember({"none", "other-candidate"}));
  embed->add_flag("--swap-labels", opts.swap_labels, "Present the E candidates in the opposite order");

  auto* all = app.add_subcommand("all", "Run every suite");
  all->add_flag("--printed-spin6-weights", opts.printed_spin6_weights, "Use the printed Spin6 weight list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  opts.tamper_other_candidate = tamper == "other-candidate";

  Report report;
  try {
    if (clifford->parsed())
      report = cmd_clifford(n, opts);
    else if (stabilizer->parsed())
      report = cmd_stabilizer(indices, opts);
    else if (lemma->parsed())
      report = cmd_lemma_cohomo(n, opts);
    else if (classify->parsed())
      report = cmd_classify(n, p1, euler, opts);
    else if (embed->parsed())
      report = cmd_embed(opts);
    else
      report = cmd_all(opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (output == "json")
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << to_text(report);
  return report.verdict() ? 0 : 1;
}
