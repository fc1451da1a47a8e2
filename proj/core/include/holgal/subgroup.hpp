#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "holgal/config.hpp"
#include "holgal/holomorph.hpp"
#include "holgal/residue.hpp"

namespace holgal {

// Dense element index: u * |units| + rank(a). Index order is the
// lexicographic (u, a) order and the identity is 0.
using ElemId = std::uint32_t;

// Hol(C_{p^e}) with precomputed multiplication, inverse and order tables.
class Holomorph {
 public:
  static std::shared_ptr<const Holomorph> create(const GroupContext& ctx,
                                                 std::size_t max_order = kDefaultMaxOrder);

  const GroupContext& context() const { return ctx_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t unit_count() const { return ctx_.units().size(); }
  bool is_p_group() const { return p_group_; }

  static constexpr ElemId identity() { return 0; }
  ElemId id(const HolElement& g) const;
  const HolElement& element(ElemId x) const { return elements_[x]; }

  ElemId mul(ElemId x, ElemId y) const { return table_[static_cast<std::size_t>(x) * order() + y]; }
  ElemId inv(ElemId x) const { return inverse_[x]; }
  ElemId conj(ElemId g, ElemId x) const { return mul(mul(g, x), inv(g)); }
  std::uint32_t element_order(ElemId x) const { return orders_[x]; }

  bool in_stabilizer(ElemId x) const { return x < unit_count(); }
  bool in_translations(ElemId x) const { return x % unit_count() == 0; }

 private:
  explicit Holomorph(const GroupContext& ctx);

  GroupContext ctx_;
  bool p_group_ = false;
  std::vector<HolElement> elements_;
  std::vector<ElemId> table_;
  std::vector<ElemId> inverse_;
  std::vector<std::uint32_t> orders_;
};

using HolPtr = std::shared_ptr<const Holomorph>;

// A subgroup of Hol(N) stored as its sorted element indices plus a
// membership mask. Canonical order: by size, then element sequence.
class Subgroup {
 public:
  // `mask` must describe a subgroup; closure() is the checked way in.
  Subgroup(HolPtr hol, boost::dynamic_bitset<> mask);

  const Holomorph& holomorph() const { return *hol_; }
  const HolPtr& holomorph_ptr() const { return hol_; }
  const GroupContext& context() const { return hol_->context(); }

  std::size_t order() const { return ids_.size(); }
  std::span<const ElemId> ids() const { return ids_; }
  const boost::dynamic_bitset<>& mask() const { return mask_; }
  // Greedy generating set, largest element orders first.
  std::span<const ElemId> generators() const { return gens_; }
  std::vector<HolElement> elements() const;

  bool contains(ElemId x) const { return mask_.test(x); }
  bool contains(const HolElement& g) const;
  bool is_subgroup_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  std::string to_string() const;

  friend bool operator==(const Subgroup& x, const Subgroup& y) { return x.ids_ == y.ids_; }
  friend std::strong_ordering operator<=>(const Subgroup& x, const Subgroup& y);

 private:
  HolPtr hol_;
  boost::dynamic_bitset<> mask_;
  std::vector<ElemId> ids_;
  std::vector<ElemId> gens_;
};

Subgroup closure(const HolPtr& hol, std::span<const ElemId> gens);
Subgroup closure(const HolPtr& hol, std::span<const HolElement> gens);
Subgroup trivial_subgroup(const HolPtr& hol);
Subgroup whole_group(const HolPtr& hol);

bool is_transitive(const Subgroup& g);
Subgroup stabilizer(const Subgroup& g);
bool is_regular(const Subgroup& g);
Subgroup n_intersection(const Subgroup& g);
Subgroup intersection(const Subgroup& x, const Subgroup& y);

// x H x^-1
Subgroup conjugate(const Subgroup& h, ElemId x);

// Both throw ParameterError unless h is contained in g.
bool is_normal(const Subgroup& g, const Subgroup& h);
Subgroup core(const Subgroup& g, const Subgroup& h);

bool are_conjugate(const Subgroup& g, const Subgroup& h1, const Subgroup& h2);
// A conjugating element x in g with x h1 x^-1 = h2, if any.
std::optional<ElemId> find_conjugator(const Subgroup& g, const Subgroup& h1, const Subgroup& h2);

Subgroup center(const Subgroup& g);
Subgroup centralizer(const Subgroup& g, ElemId x);
Subgroup derived_subgroup(const Subgroup& g);

// G intersected with the Hall p-part {(u, a) : a = 1 mod p} of Hol(N).
Subgroup hall_p_part(const Subgroup& g);

// Sorted multiset of element orders.
std::vector<std::uint32_t> order_profile(const Subgroup& g);
bool has_element_of_order(const Subgroup& g, std::uint64_t order);

// Every subgroup of Hol(N), once each, in canonical order. Throws
// CapacityError when |Hol(N)| exceeds max_order.
std::vector<Subgroup> all_subgroups(const HolPtr& hol, std::size_t max_order = kDefaultMaxOrder);

// all_subgroups() plus lookup structures; immutable once built.
class SubgroupLattice {
 public:
  static std::shared_ptr<const SubgroupLattice> build(const HolPtr& hol,
                                                      std::size_t max_order = kDefaultMaxOrder);

  const HolPtr& holomorph_ptr() const { return hol_; }
  const Holomorph& holomorph() const { return *hol_; }
  const GroupContext& context() const { return hol_->context(); }

  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  std::optional<std::size_t> index_of(const Subgroup& s) const;
  // Indices of transitive subgroups, ascending.
  const std::vector<std::size_t>& transitive() const { return transitive_; }
  // Indices of the subgroups of g with the given order, ascending.
  std::vector<std::size_t> subgroups_of(const Subgroup& g, std::size_t order) const;

 private:
  SubgroupLattice(HolPtr hol, std::vector<Subgroup> subgroups);

  HolPtr hol_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::size_t> transitive_;
  std::map<std::size_t, std::vector<std::size_t>> by_order_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

}  // namespace holgal
