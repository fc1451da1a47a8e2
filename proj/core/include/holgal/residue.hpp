#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace holgal {

using Residue = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

bool is_prime(Residue p);

// Ambient parameters of N = C_{p^e}: the modulus n = p^e and the unit group of
// Z/n in ascending order.
class GroupContext {
 public:
  GroupContext(Residue p, int e);

  Residue p() const { return p_; }
  int e() const { return e_; }
  Residue n() const { return n_; }
  const std::vector<Residue>& units() const { return units_; }

  // Position of a in units(), or -1 if a (reduced mod n) is not a unit.
  int unit_rank(Residue a) const;
  bool is_unit(Residue a) const { return unit_rank(a) >= 0; }

  Residue reduce(Residue x) const {
    Residue r = x % n_;
    return r < 0 ? r + n_ : r;
  }
  Residue mul(Residue x, Residue y) const { return reduce(x * y); }
  Residue power(Residue a, std::uint64_t k) const;
  Residue unit_inverse(Residue a) const;

  friend bool operator==(const GroupContext& x, const GroupContext& y) {
    return x.p_ == y.p_ && x.e_ == y.e_;
  }

 private:
  Residue p_;
  int e_;
  Residue n_;
  std::vector<Residue> units_;
  std::vector<int> rank_;
};

// p-adic valuation; the infinite value (valuation of 0) compares above every
// finite one.
class Valuation {
 public:
  constexpr explicit Valuation(std::uint32_t v) : v_(v) {
    if (v == kInfinite) v_ = kInfinite - 1;
  }
  static constexpr Valuation infinity() { return Valuation(Tag{}); }

  constexpr bool is_infinite() const { return v_ == kInfinite; }
  std::uint32_t value() const;

  constexpr auto operator<=>(const Valuation&) const = default;

  friend Valuation operator+(Valuation x, Valuation y) {
    if (x.is_infinite() || y.is_infinite()) return infinity();
    return Valuation(x.v_ + y.v_);
  }

  std::string to_string() const;

 private:
  struct Tag {};
  constexpr explicit Valuation(Tag) : v_(kInfinite) {}
  static constexpr std::uint32_t kInfinite =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_;
};

// Exact valuation of an arbitrary integer.
Valuation vp(const BigInt& m, Residue p);
Valuation vp(std::int64_t m, Residue p);

// Valuation of a residue modulo p^e; only values below e are exact, anything
// divisible by p^e is reported as saturated ("at least e").
struct CappedValuation {
  std::uint32_t value;
  bool saturated;
  friend bool operator==(const CappedValuation&, const CappedValuation&) = default;
};
CappedValuation vp_mod(Residue x, const GroupContext& ctx);

// 1 + a + ... + a^{k-1} mod n, by doubling on the bits of k.
Residue s_sum(Residue a, std::uint64_t k, const GroupContext& ctx);

// Closed-form v_p(S(a, k)) for a = 1 mod p.
Valuation s_valuation(Residue a, std::uint64_t k, Residue p);

// Valuation of s_sum(a, k, ctx), capped at e.
CappedValuation s_valuation_mod(Residue a, std::uint64_t k,
                                const GroupContext& ctx);

// Multiplicative order of a unit mod n.
std::uint64_t unit_order(Residue a, const GroupContext& ctx);

}  // namespace holgal
