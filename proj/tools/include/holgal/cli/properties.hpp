#pragma once

#include <string>
#include <vector>

#include "holgal/abstract_group.hpp"
#include "holgal/criteria.hpp"
#include "holgal/oracle.hpp"

namespace holgal::cli {

// FLAG marks an observation that is reported but deliberately not asserted.
enum class Status { Pass, Fail, Flag };

struct PropertyResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

std::string format_result(const PropertyResult& r);
bool all_passed(const std::vector<PropertyResult>& results);

// Exhaustive over the residues and elements of one context; no lattice needed.
std::vector<PropertyResult> residue_properties(const GroupContext& ctx);
std::vector<PropertyResult> holomorph_properties(const GroupContext& ctx);

std::vector<PropertyResult> lattice_properties(const SubgroupLattice& lattice);
std::vector<PropertyResult> hall_properties(const SubgroupLattice& lattice);

// `reports` must be the full oracle-backed sweep of the oracle's lattice.
std::vector<PropertyResult> oracle_properties(const Oracle& oracle, const std::vector<PairReport>& reports);
std::vector<PropertyResult> criteria_properties(const Oracle& oracle, const std::vector<PairReport>& reports);
std::vector<PropertyResult> structural_properties(const SubgroupLattice& lattice);
std::vector<PropertyResult> rump_properties(const Oracle& oracle);

// Isomorphism existence by trying every assignment of images to a
// generating set; independent of find_isomorphism. Intended for |A| <= 16.
bool brute_force_isomorphic(const AbstractGroup& a, const AbstractGroup& b);

}  // namespace holgal::cli
