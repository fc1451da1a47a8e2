#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "holgal/subgroup.hpp"

namespace holgal {

// A finite group given by its Cayley table on 0..size-1 (identity 0),
// together with a marked subgroup that rides along through quotients and
// must be respected by isomorphisms.
class AbstractGroup {
 public:
  using Index = std::uint32_t;

  // Throws ParameterError unless the table is a Latin square with identity
  // 0 and `marked` is a subgroup containing 0. Associativity is not checked
  // here; see check_group_law().
  AbstractGroup(std::vector<Index> table, std::vector<bool> marked);

  std::size_t size() const { return size_; }
  Index mul(Index x, Index y) const { return table_[static_cast<std::size_t>(x) * size() + y]; }
  Index inv(Index x) const { return inverse_[x]; }
  std::uint32_t element_order(Index x) const { return orders_[x]; }
  bool is_central(Index x) const { return central_[x]; }
  bool is_marked(Index x) const { return marked_[x]; }
  std::size_t marked_count() const { return marked_count_; }
  const std::vector<Index>& table() const { return table_; }
  bool has_element_of_order(std::uint64_t order) const;

  // Exhaustive for size <= 64, otherwise `samples` pseudo-random triples.
  bool check_group_law(std::size_t samples = 20000) const;

  // Same table, different marked subgroup.
  AbstractGroup with_marked(std::vector<bool> marked) const;

 private:
  std::size_t size_ = 0;
  std::vector<Index> table_;
  std::vector<bool> marked_;
  std::size_t marked_count_ = 0;
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<bool> central_;
};

// Image key used to prune isomorphism search.
struct ElementKey {
  std::uint32_t order;
  bool central;
  bool marked;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
};
ElementKey element_key(const AbstractGroup& g, AbstractGroup::Index x);

// Sorted multiset of element keys; equal signatures are necessary for an
// isomorphism of marked groups.
std::vector<ElementKey> signature(const AbstractGroup& g);

// G/C on coset representatives (the least element of each coset, cosets
// ordered by representative), marking the cosets that meet H. Throws
// ParameterError if C is not normal in G or C, H are not inside G.
AbstractGroup quotient(const Subgroup& g, const Subgroup& c, const Subgroup& h);
// Representatives used by quotient(): index i of G/C is the coset of
// result[i]. C must be normal in G.
std::vector<ElemId> coset_representatives(const Subgroup& g, const Subgroup& c);
// As above with H = C, so only the identity coset is marked.
AbstractGroup quotient(const Subgroup& g, const Subgroup& c);
// T as an abstract group with its point stabilizer marked.
AbstractGroup abstract_with_stabilizer(const Subgroup& t);

// An isomorphism f : A -> B (f[x] is the image of x) mapping A's marked
// subgroup onto B's, or nullopt.
std::optional<std::vector<AbstractGroup::Index>> find_isomorphism(const AbstractGroup& a,
                                                                  const AbstractGroup& b);

bool is_isomorphism(const AbstractGroup& a, const AbstractGroup& b,
                    const std::vector<AbstractGroup::Index>& f);

}  // namespace holgal
