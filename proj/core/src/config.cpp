#include "holgal/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

#include "holgal/errors.hpp"

namespace holgal {

std::size_t resolve_max_order(std::optional<std::size_t> explicit_bound) {
  if (explicit_bound) return *explicit_bound;
  const char* env = std::getenv("HOLGAL_MAX_ORDER");
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  std::string_view s(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw ParameterError("HOLGAL_MAX_ORDER must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace holgal
