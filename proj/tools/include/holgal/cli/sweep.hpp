#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "holgal/criteria.hpp"

namespace holgal::cli {

// Every (transitive G, H <= G with [G:H] = p^e) as lattice indices, in
// canonical order.
std::vector<std::pair<std::size_t, std::size_t>> classification_pairs(const SubgroupLattice& lattice);

// Evaluates all pairs on `jobs` worker threads; the result order is the
// canonical pair order regardless of scheduling. A null oracle skips the
// exhaustive search.
std::vector<PairReport> classify_all(const SubgroupLattice& lattice, const Oracle* oracle,
                                     unsigned jobs = 1);

}  // namespace holgal::cli
