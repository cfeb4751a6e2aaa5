#include <CLI11.hpp>
#include <iostream>

#include "netaug/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Streaming network design toolkit"};
  app.require_subcommand(1);
  netaug::CliOptions opts;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("stream", opts.input, "Stream file")->required()->check(CLI::ExistingFile);
    sub->add_option("--t", opts.t, "Stretch parameter t")->check(CLI::PositiveNumber);
    sub->add_option("--epsilon", opts.epsilon, "Accuracy parameter in (0, 1]")->check(CLI::Range(1e-9, 1.0));
    sub->add_option("--k", opts.k, "Target connectivity");
    sub->add_flag("--with-oracle", opts.with_oracle, "Also run the exact oracle and report the ratio");
    sub->add_option("--output", opts.output, "Write the selected edges as a stream file");
    sub->add_option("--report", opts.report, "Write the JSON report to this path");
  };
  const auto add_terminals = [&](CLI::App* sub) {
    sub->add_option("--terminals", opts.terminals, "Terminal vertices (default: all)")->delimiter(',');
  };
  const auto add_requirements = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--requirements", opts.requirements, "Requirement file with 'R s t r' lines");
    o->check(CLI::ExistingFile);
    if (required) o->required();
  };

  add_common(app.add_subcommand("spanner", "One-pass weighted spanner"));
  auto* link = app.add_subcommand("kcap-link", "Link-arrival connectivity augmentation");
  add_common(link);
  link->add_option("--cactus", opts.cactus, "Cactus file to use instead of the E records")->check(CLI::ExistingFile);
  add_common(app.add_subcommand("kcap-full", "Fully streaming connectivity augmentation"));
  auto* stap = app.add_subcommand("stap", "Steiner tree augmentation");
  add_common(stap);
  add_terminals(stap);
  auto* sndp = app.add_subcommand("sndp", "Survivable network design via the cascade coreset");
  add_common(sndp);
  add_requirements(sndp, true);
  add_common(app.add_subcommand("kecss", "Multi-pass k-edge-connected spanning subgraph"));
  auto* oracle = app.add_subcommand("oracle", "Exact solver for small instances");
  oracle->add_option("kind", opts.oracle_kind, "kcap, stap, sndp or kecss")
      ->required()
      ->check(CLI::IsMember({"kcap", "stap", "sndp", "kecss"}));
  add_common(oracle);
  add_terminals(oracle);
  add_requirements(oracle, false);

  CLI11_PARSE(app, argc, argv);
  opts.command = app.get_subcommands().front()->get_name();

  const netaug::CliOutcome outcome = netaug::run(opts);
  if (!outcome.report_json.empty()) std::cout << outcome.report_json;
  if (!outcome.error.empty()) std::cerr << "netaug: " << outcome.error << '\n';
  return outcome.exit_code;
}
