#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "holgal/residue.hpp"

namespace holgal {

// [sigma^u, phi_a] in Hol(C_n), acting on Z/n by x -> u + a*x. The base point
// 1_N is the residue 0. Ordered lexicographically on (u, a).
struct HolElement {
  Residue u = 0;
  Residue a = 1;

  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

inline constexpr HolElement kIdentity{0, 1};

bool is_valid(const HolElement& g, const GroupContext& ctx);

// Reduces u and a into canonical range; throws ParameterError if a is not a unit.
HolElement normalize(const HolElement& g, const GroupContext& ctx);

// All operations below reject elements that are not valid in ctx.
HolElement mul(const HolElement& g, const HolElement& h, const GroupContext& ctx);
HolElement inv(const HolElement& g, const GroupContext& ctx);
HolElement pow(const HolElement& g, std::uint64_t k, const GroupContext& ctx);
Residue act(const HolElement& g, Residue x, const GroupContext& ctx);

// Closed form when a = 1 mod p, otherwise reduces to a pure translation via
// pow(g, |phi_a|).
std::uint64_t element_order(const HolElement& g, const GroupContext& ctx);

// Least t >= 1 with g^t = 1, by repeated multiplication.
std::uint64_t element_order_iterative(const HolElement& g, const GroupContext& ctx);

// h g h^-1 g^-1 for g = (u, a), h = (v, b); always (u(b-1) - v(a-1), 1).
HolElement commutator(const HolElement& g, const HolElement& h, const GroupContext& ctx);
bool commute(const HolElement& g, const HolElement& h, const GroupContext& ctx);

std::string to_string(const HolElement& g);

// Accepts "[u, a]" with optional whitespace; values are not reduced.
HolElement parse_element(std::string_view text);
// Accepts "[u,a];[u,a];..." (empty string gives an empty list).
std::vector<HolElement> parse_element_list(std::string_view text);

}  // namespace holgal
