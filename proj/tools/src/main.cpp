#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "holgal/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace holgal::cli;

  CLI::App app{"Exact classification of quotient pairs in the holomorph of a cyclic p-group"};
  app.require_subcommand(1);

  ClassifyOptions classify;
  std::size_t classify_bound = 0;
  auto* cmd_classify = app.add_subcommand("classify", "Classify every (transitive G, index-p^e H) pair");
  cmd_classify->add_option("p", classify.p, "Prime")->required();
  cmd_classify->add_option("e", classify.e, "Exponent")->required();
  cmd_classify->add_option("--out", classify.out_path, "Write records here (plus a .manifest.json sidecar)");
  cmd_classify->add_option("--format", classify.format, "Record format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}));
  cmd_classify->add_flag("--criteria-only", classify.criteria_only, "Skip the exhaustive oracle");
  cmd_classify->add_option("--jobs", classify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* classify_max = cmd_classify->add_option("--max-order", classify_bound, "Bound on |Hol(N)|")
                           ->check(CLI::PositiveNumber);

  VerifyOptions verify;
  std::size_t verify_bound = 0;
  auto* cmd_verify = app.add_subcommand("verify", "Run the property suite for one context");
  cmd_verify->add_option("p", verify.p, "Prime")->required();
  cmd_verify->add_option("e", verify.e, "Exponent")->required();
  cmd_verify->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* verify_max =
      cmd_verify->add_option("--max-order", verify_bound, "Bound on |Hol(N)|")->check(CLI::PositiveNumber);

  ProbeOptions probe;
  std::size_t probe_bound = 0;
  auto* cmd_probe = app.add_subcommand("probe", "Classify one pair given by generators");
  cmd_probe->add_option("p", probe.p, "Prime")->required();
  cmd_probe->add_option("e", probe.e, "Exponent")->required();
  cmd_probe->add_option("--G", probe.g_spec, "Generators of G, e.g. \"[1,1];[0,3]\"")->required();
  cmd_probe->add_option("--H", probe.h_spec, "Generators of H")->required();
  auto* probe_max =
      cmd_probe->add_option("--max-order", probe_bound, "Bound on |Hol(N)|")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*cmd_classify) {
    if (*classify_max) classify.max_order = classify_bound;
    return run_classify(classify, std::cout, std::cerr);
  }
  if (*cmd_verify) {
    if (*verify_max) verify.max_order = verify_bound;
    return run_verify(verify, std::cout, std::cerr);
  }
  if (*probe_max) probe.max_order = probe_bound;
  return run_probe(probe, std::cout, std::cerr);
}
