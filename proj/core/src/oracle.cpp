#include "holgal/oracle.hpp"

#include <algorithm>

#include "holgal/errors.hpp"

namespace holgal {

namespace {

using Index = AbstractGroup::Index;

AbstractGroup cyclic_group(std::size_t m) {
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = static_cast<Index>((i + j) % m);
  std::vector<bool> marked(m, false);
  marked[0] = true;
  return AbstractGroup(std::move(table), std::move(marked));
}

// <x, y | x^m = 1, y x y^-1 = x^r, y^2 = x^t> on x^i y^j -> i + m j.
AbstractGroup metacyclic_group(std::size_t m, std::size_t r, std::size_t t) {
  const std::size_t size = 2 * m;
  std::vector<Index> table(size * size);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t exp = i + (j == 1 ? r * k : k);
          std::size_t y = j + l;
          if (y == 2) {
            exp += t;
            y = 0;
          }
          table[(i + m * j) * size + (k + m * l)] = static_cast<Index>(exp % m + m * y);
        }
      }
    }
  }
  std::vector<bool> marked(size, false);
  marked[0] = true;
  return AbstractGroup(std::move(table), std::move(marked));
}

}  // namespace

std::vector<CatalogGroup> cyclic_index2_catalog(int e) {
  if (e < 1) throw ParameterError("catalog needs e >= 1");
  const std::size_t order = std::size_t{1} << e;
  std::vector<CatalogGroup> out;
  out.push_back({"cyclic", cyclic_group(order)});
  if (e == 1) return out;
  const std::size_t m = order / 2;
  if (e == 2) {
    out.push_back({"elementary-abelian", metacyclic_group(2, 1, 0)});
    return out;
  }
  out.push_back({"cyclic-x-C2", metacyclic_group(m, 1, 0)});
  out.push_back({"dihedral", metacyclic_group(m, m - 1, 0)});
  out.push_back({"quaternion", metacyclic_group(m, m - 1, m / 2)});
  if (e >= 4) {
    out.push_back({"semidihedral", metacyclic_group(m, m / 2 - 1, 0)});
    out.push_back({"modular", metacyclic_group(m, m / 2 + 1, 0)});
  }
  return out;
}

Oracle::Oracle(LatticePtr lattice) : lattice_(std::move(lattice)) {
  const auto& lat = *lattice_;
  const auto& hol = lat.holomorph();
  std::vector<bool> seen(lat.size(), false);
  for (std::size_t idx : lat.transitive()) {
    AbstractGroup g = abstract_with_stabilizer(lat[idx]);
    auto sig = signature(g);
    const bool rep = !seen[idx];
    if (rep) {
      for (ElemId x = 0; x < hol.order(); ++x) {
        if (auto j = lat.index_of(conjugate(lat[idx], x))) seen[*j] = true;
      }
    }
    entries_.push_back({idx, std::move(g), std::move(sig), rep});
  }
}

const Oracle::Entry& Oracle::entry(std::size_t lattice_index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), lattice_index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it == entries_.end() || it->index != lattice_index) {
    throw ParameterError("subgroup " + std::to_string(lattice_index) + " is not transitive");
  }
  return *it;
}

std::vector<std::size_t> Oracle::transitive_subgroups_of_order(std::size_t m) const {
  std::vector<std::size_t> out;
  for (const auto& e : entries_) {
    if (e.group.size() == m) out.push_back(e.index);
  }
  return out;
}

const AbstractGroup& Oracle::abstract_transitive(std::size_t lattice_index) const {
  return entry(lattice_index).group;
}

bool Oracle::is_class_representative(std::size_t lattice_index) const {
  return entry(lattice_index).class_rep;
}

OracleAnswer Oracle::admits_cyclic_type(const AbstractGroup& gq, const OracleOptions& options) const {
  const auto& ctx = lattice_->context();
  const auto n = static_cast<std::size_t>(ctx.n());
  OracleAnswer answer;
  if (gq.size() != n * gq.marked_count()) {
    answer.reason = "size " + std::to_string(gq.size()) + " is not n * |marked| = " +
                    std::to_string(n) + " * " + std::to_string(gq.marked_count());
    return answer;
  }
  if (options.order_prefilter && ctx.p() == 2 && !gq.has_element_of_order(n / 2)) {
    answer.reason = "no element of order 2^(e-1)";
    return answer;
  }
  const auto sig = signature(gq);
  bool any_size = false;
  bool any_signature = false;
  for (const auto& e : entries_) {
    if (e.group.size() != gq.size()) continue;
    if (options.conjugacy_reduction && !e.class_rep) continue;
    any_size = true;
    if (e.signature != sig) continue;
    any_signature = true;
    if (auto f = find_isomorphism(gq, e.group)) {
      answer.admits = true;
      answer.witness = e.index;
      answer.isomorphism = std::move(*f);
      return answer;
    }
  }
  if (!any_size) {
    answer.reason = "no transitive subgroup of order " + std::to_string(gq.size());
  } else if (!any_signature) {
    answer.reason = "element-order profile matches no transitive subgroup";
  } else {
    answer.reason = "no isomorphism onto (T, Stab_T(1_N)) for any transitive T";
  }
  return answer;
}

std::vector<RegularClass> Oracle::regular_subgroups() const {
  const auto& ctx = lattice_->context();
  const auto n = static_cast<std::size_t>(ctx.n());
  std::vector<CatalogGroup> catalog;
  if (ctx.p() == 2) {
    catalog = cyclic_index2_catalog(ctx.e());
  } else {
    catalog.push_back({"cyclic", cyclic_group(n)});
  }
  std::vector<RegularClass> out;
  for (const auto& e : entries_) {
    if (e.group.size() != n) continue;
    std::string label = "unclassified";
    for (const auto& c : catalog) {
      if (find_isomorphism(e.group, c.group)) {
        label = c.label;
        break;
      }
    }
    out.push_back({e.index, std::move(label)});
  }
  return out;
}

}  // namespace holgal
