#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "app/catalog.hpp"
#include "app/pipeline.hpp"
#include "plocal/errors.hpp"

namespace {

std::vector<std::string> split_checks(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace plocal::app;

  CLI::App cli{"Finite-scale checks for p-local homotopy of linking systems"};
  cli.require_subcommand(1);

  auto* analyze = cli.add_subcommand("analyze", "Run the verification pipeline on a group");
  std::string group_text;
  PipelineOptions options;
  std::string checks;
  std::string format = "json";
  bool skeletal = true;
  bool no_timings = false;
  analyze->add_option("--group", group_text, "Group spec, e.g. sym:4 or \"sym:3 x cyc:3\"")->required();
  analyze->add_option("--prime", options.prime, "The prime p")->required();
  analyze->add_option("--max-degree", options.max_degree, "Top degree of nerve complexes")
      ->capture_default_str();
  analyze->add_option("--max-limit-degree", options.max_limit_degree, "Top degree of functor cochains")
      ->capture_default_str();
  analyze->add_option("--cohomology-index-max", options.cohomology_index_max, "Largest i for F_i")
      ->capture_default_str();
  analyze->add_option("--budget", options.budget, "Largest basis per degree")->capture_default_str();
  analyze->add_option("--order-bound", options.order_bound, "Largest group order accepted")
      ->capture_default_str();
  analyze->add_option("--skeletal", skeletal, "Use one object per conjugacy class")->capture_default_str();
  analyze->add_option("--check", checks, "Comma-separated subset of checks to run");
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  analyze->add_flag("--no-timings", no_timings, "Leave timings out of the report");

  auto* parse_check = cli.add_subcommand("parse-check", "Parse cycle notation and print the permutation");
  std::string cycles;
  parse_check->add_option("cycles", cycles, "Cycle notation, e.g. \"(1 2)(2 3)\"")->required();

  auto* catalog = cli.add_subcommand("catalog", "List the built-in group families");
  (void)catalog;

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      options.skeletal = skeletal;
      options.checks = split_checks(checks);
      const auto spec = parse_group_spec(group_text);
      const auto report = run_pipeline(spec, options);
      std::cout << emit_report(report, format == "text" ? Format::text : Format::json, !no_timings);
      if (report.overall() == Status::fail) return 1;
      if (report.aborted) return 2;
      return 0;
    }
    if (*parse_check) {
      const auto p = parse_cycles(cycles);
      std::cout << "cycles " << p.to_cycles() << '\n' << "images";
      for (auto x : p.images()) std::cout << ' ' << (x + 1);
      std::cout << '\n';
      return 0;
    }
    for (const auto& f : catalog_families()) std::cout << f.syntax << "  " << f.description << '\n';
    std::cout << "acceptance set:";
    for (const auto& g : acceptance_groups()) std::cout << " \"" << g << '"';
    std::cout << '\n';
    return 0;
  } catch (const plocal::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
