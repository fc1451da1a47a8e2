#pragma once

#include <cstddef>
#include <optional>

namespace holgal {

inline constexpr std::size_t kDefaultMaxOrder = 512;

// Bound on |Hol(N)| for exhaustive work: an explicit value wins, then the
// HOLGAL_MAX_ORDER environment variable, then kDefaultMaxOrder.
std::size_t resolve_max_order(std::optional<std::size_t> explicit_bound = std::nullopt);

}  // namespace holgal
