#include <algorithm>

#include <doctest.h>

#include "holgal/errors.hpp"
#include "test_support.hpp"

using namespace holgal;
using holgal::test::ctx;

namespace {

BigInt exact_s(Residue a, std::uint64_t k) {
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    sum += term;
    term *= a;
  }
  return sum;
}

// Repeated division on the big integer; an independent v_p.
std::uint32_t naive_vp(BigInt m, Residue p) {
  std::uint32_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace

TEST_SUITE("residue") {
  TEST_CASE("group context") {
    const GroupContext c = ctx(2, 4);
    CHECK(c.n() == 16);
    CHECK(c.units().size() == 8);
    CHECK(std::is_sorted(c.units().begin(), c.units().end()));
    for (Residue a : c.units()) CHECK(a % 2 == 1);
    CHECK(ctx(3, 3).units().size() == 18);
    CHECK(ctx(5, 2).units().size() == 20);
    CHECK_THROWS_AS(GroupContext(4, 2), ParameterError);
    CHECK_THROWS_AS(GroupContext(3, 0), ParameterError);
    CHECK_FALSE(c.is_unit(6));
    CHECK(c.mul(c.unit_inverse(7), 7) == 1);
  }

  TEST_CASE("vp") {
    CHECK(vp(BigInt(0), 2).is_infinite());
    CHECK(vp(std::int64_t{0}, 2) == Valuation::infinity());
    CHECK(vp(std::int64_t{12}, 2) == Valuation(2));
    CHECK(vp(std::int64_t{486}, 3) == Valuation(5));
    CHECK(vp(std::int64_t{-486}, 3) == Valuation(5));
    CHECK(vp(BigInt(7), 7) == Valuation(1));
    CHECK_THROWS_AS(vp(std::int64_t{12}, 4), ParameterError);
    const BigInt big = BigInt(1) << 200;
    CHECK(vp(big * 3, 2) == Valuation(200));
  }

  TEST_CASE("valuation ordering") {
    CHECK(Valuation(1000) < Valuation::infinity());
    CHECK(Valuation(0) < Valuation(1));
    CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
    CHECK(Valuation::infinity().to_string() == "inf");
    CHECK_THROWS(Valuation::infinity().value());
  }

  TEST_CASE("s_sum examples") {
    CHECK(s_sum(5, 0, ctx(2, 4)) == 0);
    CHECK(s_sum(5, 4, ctx(2, 4)) == 12);
    CHECK(s_sum(3, 2, ctx(2, 2)) == 0);
    CHECK_THROWS_AS(s_sum(6, 3, ctx(2, 4)), ParameterError);
  }

  TEST_CASE("s_sum agrees with the exact sum") {
    for (auto [p, e] : {std::pair<Residue, int>{2, 2}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 5}}) {
      const GroupContext c = ctx(p, e);
      for (Residue a : c.units()) {
        for (std::uint64_t k = 0; k <= 4 * static_cast<std::uint64_t>(c.n()); ++k) {
          REQUIRE(s_sum(a, k, c) == static_cast<Residue>(exact_s(a, k) % c.n()));
        }
      }
    }
  }

  TEST_CASE("s_valuation examples") {
    CHECK(s_valuation(3, 2, 2) == Valuation(2));
    CHECK(s_valuation(5, 4, 2) == Valuation(2));
    CHECK(s_valuation(4, 3, 3) == Valuation(1));
    CHECK(s_valuation(7, 0, 3).is_infinite());
    CHECK_THROWS_AS(s_valuation(2, 3, 3), ParameterError);
    CHECK_THROWS_AS(s_valuation(5, 3, 3), ParameterError);
  }

  TEST_CASE("valuation lemma against big integers") {
    for (auto [p, e] : {std::pair<Residue, int>{2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
      const GroupContext c = ctx(p, e);
      for (Residue a = 1; a < c.n(); a += p) {
        for (std::uint64_t k = 1; k <= 4 * static_cast<std::uint64_t>(c.n()); ++k) {
          const Valuation v = s_valuation(a, k, p);
          REQUIRE(v == Valuation(naive_vp(exact_s(a, k), p)));
        }
      }
    }
  }

  TEST_CASE("capped valuation") {
    const GroupContext c = ctx(2, 4);
    CHECK(vp_mod(0, c) == CappedValuation{4, true});
    CHECK(vp_mod(8, c) == CappedValuation{3, false});
    CHECK(vp_mod(12, c) == CappedValuation{2, false});
    CHECK(s_valuation_mod(5, 4, c) == CappedValuation{2, false});
    CHECK(s_valuation_mod(3, 8, c).saturated);
  }

  TEST_CASE("unit_order") {
    CHECK(unit_order(1, ctx(3, 3)) == 1);
    CHECK(unit_order(3, ctx(2, 3)) == 2);
    CHECK(unit_order(5, ctx(2, 4)) == 4);
    CHECK(unit_order(2, ctx(3, 2)) == 6);
    CHECK_THROWS_AS(unit_order(4, ctx(2, 3)), ParameterError);
    for (int e = 3; e <= 6; ++e) {
      const GroupContext c = ctx(2, e);
      for (Residue a : c.units()) {
        const auto t = unit_order(a, c);
        CHECK(c.units().size() % t == 0);
        if (a % 4 == 1) CHECK((std::uint64_t{1} << (e - 2)) % t == 0);
      }
    }
  }
}
