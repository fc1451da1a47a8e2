#include "holgal/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace holgal::cli {

std::vector<std::pair<std::size_t, std::size_t>> classification_pairs(const SubgroupLattice& lattice) {
  const auto n = static_cast<std::size_t>(lattice.context().n());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t gi : lattice.transitive()) {
    for (std::size_t hi : lattice.subgroups_of(lattice[gi], lattice[gi].order() / n)) {
      pairs.emplace_back(gi, hi);
    }
  }
  return pairs;
}

std::vector<PairReport> classify_all(const SubgroupLattice& lattice, const Oracle* oracle, unsigned jobs) {
  const auto pairs = classification_pairs(lattice);
  std::vector<PairReport> results(pairs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < pairs.size(); i = next++) {
        results[i] = evaluate_pair(lattice, oracle, pairs[i].first, pairs[i].second);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = pairs.size();
    }
  };

  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace holgal::cli
