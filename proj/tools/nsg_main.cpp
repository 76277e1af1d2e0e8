// nsg: analyze numerical semigroups and sweep the semigroup tree.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsg/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup invariants, Wilf checks and exhaustive sweeps"};
  app.require_subcommand(1);

  std::string gens_text;
  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "Print the record for one semigroup");
  analyze->add_option("--gens", gens_text, "Comma-separated generators, e.g. 3,5,7")->required();
  analyze->add_option("--format", analyze_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  int verify_genus = 0;
  int verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run every invariant check over all semigroups up to a genus");
  verify->add_option("--max-genus", verify_genus, "Genus bound (at most 40)")->required();
  verify->add_option("--jobs", verify_jobs, "Worker threads");

  int enum_genus = 0;
  std::string enum_out = "-";
  std::string enum_format = "csv";
  std::vector<std::string> enum_filters;
  auto* enumerate = app.add_subcommand("enumerate", "Emit one record per semigroup up to a genus");
  enumerate->add_option("--max-genus", enum_genus, "Genus bound (at most 40)")->required();
  enumerate->add_option("--out", enum_out, "Output path, '-' for stdout");
  enumerate->add_option("--format", enum_format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
  enumerate->add_option("--filter", enum_filters,
                        "multiplicity=K, m-minus-nu=K, covered or uncovered (repeatable)");

  int cov_genus = 0;
  int cov_jobs = 1;
  auto* coverage = app.add_subcommand("coverage", "Count semigroups satisfying each sufficient condition");
  coverage->add_option("--max-genus", cov_genus, "Genus bound (at most 40)")->required();
  coverage->add_option("--jobs", cov_jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : nsg::cli::kExitUsage;
  }

  try {
    if (*analyze)
      return nsg::cli::cmd_analyze(nsg::cli::parse_int_list(gens_text), analyze_format, std::cout, std::cerr);
    if (*verify) return nsg::cli::cmd_verify(verify_genus, verify_jobs, std::cout, std::cerr);
    if (*coverage) return nsg::cli::cmd_coverage(cov_genus, cov_jobs, std::cout, std::cerr);
    if (*enumerate) {
      nsg::EnumerationConfig config;
      config.max_genus = enum_genus;
      for (const auto& term : enum_filters) nsg::cli::apply_filter(term, config);
      return nsg::cli::cmd_enumerate(config, enum_out, enum_format, std::cout, std::cerr);
    }
  } catch (const nsg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return nsg::cli::kExitUsage;
  }
  return nsg::cli::kExitUsage;
}
