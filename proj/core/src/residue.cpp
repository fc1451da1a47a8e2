#include "holgal/residue.hpp"

#include <numeric>

#include "holgal/errors.hpp"

namespace holgal {

namespace {

constexpr Residue kMaxModulus = Residue{1} << 24;

Residue checked_prime(Residue p) {
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  return p;
}

}  // namespace

bool is_prime(Residue p) {
  if (p < 2) return false;
  for (Residue d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

GroupContext::GroupContext(Residue p, int e) : p_(checked_prime(p)), e_(e), n_(1) {
  if (e < 1) throw ParameterError("exponent e must be at least 1");
  for (int i = 0; i < e; ++i) {
    if (n_ > kMaxModulus / p) throw ParameterError("p^e is too large for a residue context");
    n_ *= p;
  }
  rank_.assign(static_cast<std::size_t>(n_), -1);
  for (Residue a = 1; a < n_; ++a) {
    if (a % p_ != 0) {
      rank_[static_cast<std::size_t>(a)] = static_cast<int>(units_.size());
      units_.push_back(a);
    }
  }
}

int GroupContext::unit_rank(Residue a) const {
  return rank_[static_cast<std::size_t>(reduce(a))];
}

Residue GroupContext::power(Residue a, std::uint64_t k) const {
  Residue base = reduce(a);
  Residue acc = reduce(1);
  while (k != 0) {
    if (k & 1U) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return acc;
}

Residue GroupContext::unit_inverse(Residue a) const {
  if (!is_unit(a)) throw ParameterError(std::to_string(a) + " is not a unit mod " + std::to_string(n_));
  // Extended Euclid on (a, n).
  Residue r0 = n_, r1 = reduce(a), t0 = 0, t1 = 1;
  while (r1 != 0) {
    Residue q = r0 / r1;
    Residue r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    Residue t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return reduce(t0);
}

std::uint32_t Valuation::value() const {
  if (is_infinite()) throw ParameterError("valuation is infinite");
  return v_;
}

std::string Valuation::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(v_);
}

Valuation vp(const BigInt& m, Residue p) {
  checked_prime(p);
  if (m == 0) return Valuation::infinity();
  BigInt x = abs(m);
  const BigInt bp = p;
  std::uint32_t v = 0;
  while (x % bp == 0) {
    x /= bp;
    ++v;
  }
  return Valuation(v);
}

Valuation vp(std::int64_t m, Residue p) {
  checked_prime(p);
  if (m == 0) return Valuation::infinity();
  std::uint32_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return Valuation(v);
}

CappedValuation vp_mod(Residue x, const GroupContext& ctx) {
  x = ctx.reduce(x);
  if (x == 0) return {static_cast<std::uint32_t>(ctx.e()), true};
  return {vp(x, ctx.p()).value(), false};
}

Residue s_sum(Residue a, std::uint64_t k, const GroupContext& ctx) {
  if (!ctx.is_unit(a)) {
    throw ParameterError("S(a, k) needs a coprime to p, got a = " + std::to_string(a));
  }
  a = ctx.reduce(a);
  // Invariant: sum = S(a, m), pw = a^m for the prefix m of k's bits read so far.
  Residue sum = 0;
  Residue pw = ctx.reduce(1);
  for (int bit = 63; bit >= 0; --bit) {
    sum = ctx.mul(sum, 1 + pw);
    pw = ctx.mul(pw, pw);
    if ((k >> bit) & 1U) {
      sum = ctx.reduce(sum + pw);
      pw = ctx.mul(pw, a);
    }
  }
  return sum;
}

Valuation s_valuation(Residue a, std::uint64_t k, Residue p) {
  checked_prime(p);
  if (((a % p) + p) % p != 1) {
    throw ParameterError("valuation formula needs a = 1 mod p, got a = " + std::to_string(a));
  }
  const Valuation vk = vp(static_cast<std::int64_t>(k), p);
  if (p != 2) return vk;
  const bool a_is_1_mod_4 = ((a % 4) + 4) % 4 == 1;
  if (a_is_1_mod_4 || (k & 1U) != 0) return vk;
  return vk + vp((a + 1) / 2, p);
}

CappedValuation s_valuation_mod(Residue a, std::uint64_t k, const GroupContext& ctx) {
  return vp_mod(s_sum(a, k, ctx), ctx);
}

std::uint64_t unit_order(Residue a, const GroupContext& ctx) {
  if (!ctx.is_unit(a)) {
    throw ParameterError(std::to_string(a) + " is not a unit mod " + std::to_string(ctx.n()));
  }
  a = ctx.reduce(a);
  const Residue one = ctx.reduce(1);
  std::uint64_t t = 1;
  for (Residue x = a; x != one; x = ctx.mul(x, a)) ++t;
  return t;
}

}  // namespace holgal
