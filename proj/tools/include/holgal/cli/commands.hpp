#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "holgal/residue.hpp"

namespace holgal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDisagreement = 1,  // classify: some record disagrees; verify: some property failed
  kExitUsage = 2,         // bad arguments, capacity exceeded, invalid probe input
  kExitIo = 3,
};

enum class Format { Json, Csv };

struct ClassifyOptions {
  Residue p = 2;
  int e = 2;
  std::optional<std::string> out_path;
  Format format = Format::Json;
  bool criteria_only = false;
  unsigned jobs = 1;
  std::optional<std::size_t> max_order;
};

struct VerifyOptions {
  Residue p = 2;
  int e = 2;
  unsigned jobs = 1;
  std::optional<std::size_t> max_order;
};

struct ProbeOptions {
  Residue p = 2;
  int e = 2;
  std::string g_spec;
  std::string h_spec;
  std::optional<std::size_t> max_order;
};

// With out_path set, records go to that file, the subgroup manifest to
// "<out_path>.manifest.json" and the summary to `out`. Otherwise records go
// to `out` and the summary to `err`.
int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);
int run_probe(const ProbeOptions& options, std::ostream& out, std::ostream& err);

}  // namespace holgal::cli
