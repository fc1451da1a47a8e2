#pragma once

#include <string>

#include "holgal/criteria.hpp"
#include "holgal/subgroup.hpp"

namespace holgal::cli {

inline constexpr const char* kSchemaVersion = "v1";

// One verdict per line; both formats carry the same columns in the same order.
std::string to_json_line(const Verdict& v);
std::string csv_header();
std::string to_csv_line(const Verdict& v);

// The canonical subgroup ordering that g_index / h_index refer to.
std::string manifest_json(const SubgroupLattice& lattice);

}  // namespace holgal::cli
