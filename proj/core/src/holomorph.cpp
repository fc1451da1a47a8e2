#include "holgal/holomorph.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>

#include "holgal/errors.hpp"

namespace holgal {

namespace {

void require_valid(const HolElement& g, const GroupContext& ctx) {
  if (!is_valid(g, ctx)) {
    throw ParameterError("element " + to_string(g) + " is not in Hol(C_" +
                         std::to_string(ctx.n()) + ")");
  }
}

std::uint64_t pow_int(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// p^max(0, k) where k = e - (valuations) may be -infinity.
std::uint64_t translation_order(const GroupContext& ctx, Valuation drop) {
  if (drop.is_infinite() || drop.value() >= static_cast<std::uint32_t>(ctx.e())) return 1;
  return pow_int(static_cast<std::uint64_t>(ctx.p()), ctx.e() - drop.value());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Residue parse_int(std::string_view s) {
  s = trim(s);
  Residue v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParameterError("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_valid(const HolElement& g, const GroupContext& ctx) {
  return g.u >= 0 && g.u < ctx.n() && g.a > 0 && g.a < ctx.n() && ctx.is_unit(g.a);
}

HolElement normalize(const HolElement& g, const GroupContext& ctx) {
  HolElement r{ctx.reduce(g.u), ctx.reduce(g.a)};
  require_valid(r, ctx);
  return r;
}

HolElement mul(const HolElement& g, const HolElement& h, const GroupContext& ctx) {
  require_valid(g, ctx);
  require_valid(h, ctx);
  return {ctx.reduce(g.u + h.u * g.a), ctx.mul(g.a, h.a)};
}

HolElement inv(const HolElement& g, const GroupContext& ctx) {
  require_valid(g, ctx);
  const Residue ainv = ctx.unit_inverse(g.a);
  return {ctx.reduce(-g.u * ainv), ainv};
}

HolElement pow(const HolElement& g, std::uint64_t k, const GroupContext& ctx) {
  require_valid(g, ctx);
  return {ctx.mul(g.u, s_sum(g.a, k, ctx)), ctx.power(g.a, k)};
}

Residue act(const HolElement& g, Residue x, const GroupContext& ctx) {
  require_valid(g, ctx);
  return ctx.reduce(g.u + g.a * x);
}

std::uint64_t element_order_iterative(const HolElement& g, const GroupContext& ctx) {
  require_valid(g, ctx);
  std::uint64_t t = 1;
  for (HolElement x = g; x != kIdentity; x = mul(x, g, ctx)) ++t;
  return t;
}

std::uint64_t element_order(const HolElement& g, const GroupContext& ctx) {
  require_valid(g, ctx);
  const Residue p = ctx.p();
  const std::uint64_t phi_order = unit_order(g.a, ctx);
  std::uint64_t result = 0;
  if (g.a % p == 1) {
    Valuation drop = vp(g.u, p);
    if (p == 2 && g.a % 4 == 3) drop = drop + vp((g.a + 1) / 2, p);
    result = std::max(translation_order(ctx, drop), phi_order);
  } else {
    const HolElement t = pow(g, phi_order, ctx);
    assert(t.a == 1);
    const auto g_u = static_cast<std::uint64_t>(std::gcd(t.u, ctx.n()));
    result = phi_order * (static_cast<std::uint64_t>(ctx.n()) / g_u);
  }
  assert(result == element_order_iterative(g, ctx));
  return result;
}

HolElement commutator(const HolElement& g, const HolElement& h, const GroupContext& ctx) {
  return mul(mul(mul(h, g, ctx), inv(h, ctx), ctx), inv(g, ctx), ctx);
}

bool commute(const HolElement& g, const HolElement& h, const GroupContext& ctx) {
  require_valid(g, ctx);
  require_valid(h, ctx);
  return ctx.reduce(g.u * (h.a - 1)) == ctx.reduce(h.u * (g.a - 1));
}

std::string to_string(const HolElement& g) {
  return "[" + std::to_string(g.u) + ", " + std::to_string(g.a) + "]";
}

HolElement parse_element(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParameterError("expected '[u, a]', got '" + std::string(text) + "'");
  }
  s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos) {
    throw ParameterError("expected '[u, a]', got '" + std::string(text) + "'");
  }
  return {parse_int(s.substr(0, comma)), parse_int(s.substr(comma + 1))};
}

std::vector<HolElement> parse_element_list(std::string_view text) {
  std::vector<HolElement> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_element(text.substr(start, semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace holgal
