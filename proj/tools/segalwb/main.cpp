// segalwb: runs verification suites over configurable fixtures.
// Exit status: 0 every check passed, 1 a check failed, 2 bad configuration or bounds.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "report.hpp"
#include "segal/error.hpp"
#include "suites.hpp"

using namespace segalwb;

namespace {

std::vector<std::string> split_suites(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segal machine workbench: verification suites for bar-construction machines"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, group, suite, report_path, tag;
  std::optional<int> trunc, qmax, dmax;
  bool jsonl = false;
  app.add_option("-c,--config", config_path, "JSON config with sections group, diagram, machine, suite");
  app.add_option("--trunc", trunc, "truncation N of the index categories")->check(CLI::PositiveNumber);
  app.add_option("--qmax", qmax, "bar degree bound Q")->check(CLI::NonNegativeNumber);
  app.add_option("--dmax", dmax, "simplicial degree bound D")->check(CLI::NonNegativeNumber);
  app.add_option("--group", group, "group such as e, C2, S3, C2xC3");
  auto* suite_opt = app.add_option("--suite", suite, "comma-separated suites for `run`");
  app.add_option("--report", report_path, "write the line-delimited JSON report here");
  app.add_flag("--jsonl", jsonl, "print the JSON report on stdout instead of the human one");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->require_subcommand(1);
  for (const char* s : {"iso-r", "coherence", "bpq", "em", "comparisons"}) verify->add_subcommand(s, std::string("suite ") + s);
  auto* demo = app.add_subcommand("demo", "demonstrations");
  demo->require_subcommand(1);
  demo->add_subcommand("n-failure", "collapse of the prolonged unit over N_G");
  auto* machine = app.add_subcommand("machine", "machine output");
  machine->require_subcommand(1);
  auto* machine_run = machine->add_subcommand("run", "build levels and report their homology");
  machine_run->add_option("--tag", tag, "Sigma, SigmaG, NGSmash or NGProduct");
  auto* describe = app.add_subcommand("describe", "describe objects");
  describe->require_subcommand(1);
  describe->add_subcommand("cats", "index categories and hom-set sizes");
  auto* run = app.add_subcommand("run", "run the suites selected in the config or by --suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunConfig cfg;
  std::vector<std::string> selected;
  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    if (!group.empty()) {
      cfg.group = parse_group_name(group);
      cfg.group_name = group;
    }
    if (trunc) cfg.truncation = trunc;
    if (qmax) cfg.qmax = qmax;
    if (dmax) cfg.dmax = dmax;
    if (!tag.empty()) cfg.tag = parse_machine_tag(tag);
    if (*suite_opt) cfg.suite = split_suites(suite);
    if (!report_path.empty()) cfg.output = report_path;

    if (describe->parsed()) {
      describe_categories(cfg, std::cout);
      return 0;
    }
    if (verify->parsed()) {
      selected.push_back(verify->get_subcommands().front()->get_name());
    } else if (demo->parsed()) {
      selected.push_back("n-failure");
    } else if (machine_run->parsed()) {
      selected.push_back("machine");
    } else if (run->parsed()) {
      selected = cfg.suite.value_or(std::vector<std::string>{});
    }
    for (const auto& s : selected)
      if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
        throw ConfigError("unknown suite '" + s + "'");
  } catch (const ConfigError& e) {
    std::cerr << "segalwb: configuration error: " << e.what() << "\n";
    return 2;
  } catch (const segal::Error& e) {
    std::cerr << "segalwb: configuration error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  try {
    for (const auto& s : selected) run_suite(s, cfg, report);
  } catch (const ConfigError& e) {
    std::cerr << "segalwb: configuration error: " << e.what() << "\n";
    return 2;
  } catch (const segal::PreconditionError& e) {
    std::cerr << "segalwb: bound violation: " << e.what() << "\n";
    return 2;
  }

  if (jsonl) {
    report.write_jsonl(std::cout);
  } else {
    report.write_human(std::cout);
  }
  if (!cfg.output.empty()) {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "segalwb: cannot write report to '" << cfg.output << "'\n";
      return 2;
    }
    report.write_jsonl(out);
  }
  return report.all_pass() ? 0 : 1;
}
