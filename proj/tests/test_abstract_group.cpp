#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "holgal/abstract_group.hpp"
#include "holgal/errors.hpp"
#include "test_support.hpp"

using namespace holgal;
using holgal::test::gen;
using Index = AbstractGroup::Index;

namespace {

AbstractGroup cyclic(std::size_t m) {
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = static_cast<Index>((i + j) % m);
  }
  std::vector<bool> marked(m, false);
  marked[0] = true;
  return AbstractGroup(table, marked);
}

AbstractGroup klein() {
  std::vector<Index> table(16);
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 4; ++j) table[i * 4 + j] = i ^ j;
  }
  return AbstractGroup(table, {true, false, false, false});
}

// Every bijection, checked against the full table.
bool exhaustive_isomorphic(const AbstractGroup& a, const AbstractGroup& b) {
  if (a.size() != b.size()) return false;
  std::vector<Index> f(a.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (Index x = 0; x < a.size() && ok; ++x) {
      if (a.is_marked(x) != b.is_marked(f[x])) ok = false;
      for (Index y = 0; y < a.size() && ok; ++y) ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace

TEST_SUITE("grouplat") {
  TEST_CASE("abstract group validation") {
    CHECK_THROWS_AS(AbstractGroup({0, 1, 1, 1}, {true, false}), ParameterError);
    CHECK_THROWS_AS(AbstractGroup({1, 0, 0, 1}, {true, false}), ParameterError);
    CHECK_THROWS_AS(AbstractGroup({0, 1, 2, 1, 2, 0}, {true, false, false}), ParameterError);
    CHECK_THROWS_AS(AbstractGroup({0, 1, 1, 0}, {false, true}), ParameterError);
    const AbstractGroup c4 = cyclic(4);
    CHECK(c4.check_group_law());
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.inv(1) == 3);
    CHECK(c4.is_central(2));
    CHECK_THROWS_AS(c4.with_marked({true, true, false, false}), ParameterError);
  }

  TEST_CASE("quotient examples") {
    const HolPtr h = test::hol(2, 2);
    const Subgroup all = whole_group(h);
    const Subgroup refl = gen(h, {{1, 3}});
    const AbstractGroup same = quotient(all, trivial_subgroup(h), refl);
    CHECK(same.size() == 8);
    CHECK(same.marked_count() == 2);
    CHECK(same.check_group_law());

    const AbstractGroup mod_center = quotient(all, gen(h, {{2, 1}}));
    CHECK(mod_center.size() == 4);
    CHECK(find_isomorphism(mod_center, klein()));
    CHECK_FALSE(find_isomorphism(mod_center, cyclic(4)));

    CHECK(quotient(all, all).size() == 1);
    CHECK_THROWS_AS(quotient(all, refl), ParameterError);

    const auto reps = coset_representatives(all, gen(h, {{2, 1}}));
    CHECK(reps.size() == 4);
    CHECK(reps[0] == Holomorph::identity());
    CHECK(std::is_sorted(reps.begin(), reps.end()));
  }

  TEST_CASE("quotient tables are group laws") {
    const auto lattice = SubgroupLattice::build(test::hol(2, 4));
    for (std::size_t gi : lattice->transitive()) {
      const Subgroup& g = (*lattice)[gi];
      for (std::size_t hi : lattice->subgroups_of(g, g.order() / 16)) {
        const Subgroup& hs = (*lattice)[hi];
        const AbstractGroup q = quotient(g, core(g, hs), hs);
        CHECK(q.check_group_law());
        CHECK(q.size() * core(g, hs).order() == g.order());
        CHECK(q.marked_count() * core(g, hs).order() == hs.order());
      }
    }
  }

  TEST_CASE("find_isomorphism examples") {
    const HolPtr h = test::hol(2, 2);
    const Subgroup all = whole_group(h);
    const AbstractGroup d4 = abstract_with_stabilizer(all);
    const auto self = find_isomorphism(d4, d4);
    REQUIRE(self);
    CHECK(is_isomorphism(d4, d4, *self));
    CHECK_FALSE(find_isomorphism(cyclic(4), klein()));
    CHECK_FALSE(find_isomorphism(cyclic(4), cyclic(5)));

    const AbstractGroup reflection_marked = quotient(all, trivial_subgroup(h), gen(h, {{1, 3}}));
    const auto f = find_isomorphism(reflection_marked, d4);
    REQUIRE(f);
    CHECK(is_isomorphism(reflection_marked, d4, *f));
    CHECK(exhaustive_isomorphic(reflection_marked, d4));

    const AbstractGroup center_marked = quotient(all, trivial_subgroup(h), gen(h, {{2, 1}}));
    CHECK_FALSE(find_isomorphism(center_marked, d4));
    CHECK_FALSE(exhaustive_isomorphic(center_marked, d4));
  }

  TEST_CASE("find_isomorphism agrees with exhaustive search at order 8") {
    const auto lattice = SubgroupLattice::build(test::hol(2, 3));
    std::vector<AbstractGroup> groups;
    for (const auto& s : lattice->subgroups()) {
      if (s.order() != 8) continue;
      for (const auto& m : lattice->subgroups()) {
        if (m.is_subgroup_of(s) && m.order() <= 2) groups.push_back(quotient(s, trivial_subgroup(s.holomorph_ptr()), m));
      }
    }
    REQUIRE(groups.size() > 20);
    for (std::size_t i = 0; i < groups.size(); i += 3) {
      for (std::size_t j = 0; j < groups.size(); j += 5) {
        const auto f = find_isomorphism(groups[i], groups[j]);
        CHECK(f.has_value() == exhaustive_isomorphic(groups[i], groups[j]));
        if (f) CHECK(is_isomorphism(groups[i], groups[j], *f));
      }
    }
  }

  TEST_CASE("signature") {
    const AbstractGroup c4 = cyclic(4);
    const auto sig = signature(c4);
    CHECK(sig.size() == 4);
    CHECK(std::is_sorted(sig.begin(), sig.end()));
    CHECK(element_key(c4, 0) == ElementKey{1, true, true});
    CHECK(signature(klein()) != sig);
  }
}
