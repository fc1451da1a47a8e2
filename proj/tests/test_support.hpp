#pragma once

#include <set>
#include <vector>

#include "holgal/holomorph.hpp"
#include "holgal/residue.hpp"
#include "holgal/subgroup.hpp"

namespace holgal::test {

inline GroupContext ctx(Residue p, int e) { return GroupContext(p, e); }

inline HolPtr hol(Residue p, int e, std::size_t bound = 4096) { return Holomorph::create(GroupContext(p, e), bound); }

inline Subgroup gen(const HolPtr& h, std::vector<HolElement> gens) {
  return closure(h, std::span<const HolElement>(gens));
}

// Straight from the composition rule, without any library arithmetic.
inline HolElement naive_mul(const HolElement& g, const HolElement& h, Residue n) {
  return {(g.u + h.u * g.a) % n, (g.a * h.a) % n};
}

inline std::set<HolElement> as_set(const Subgroup& s) {
  const auto els = s.elements();
  return {els.begin(), els.end()};
}

}  // namespace holgal::test
