#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holgal/abstract_group.hpp"
#include "holgal/subgroup.hpp"

namespace holgal {

struct OracleOptions {
  // p = 2: reject groups with no element of order 2^{e-1} before searching.
  bool order_prefilter = true;
  // Try one transitive subgroup per Hol(N)-conjugacy class only.
  bool conjugacy_reduction = true;
};

struct OracleAnswer {
  bool admits = false;
  // On success: lattice index of the witness T and the isomorphism from the
  // queried group onto abstract_transitive(T).
  std::optional<std::size_t> witness;
  std::vector<AbstractGroup::Index> isomorphism;
  // On failure: the strongest filter that fired.
  std::string reason;
};

struct RegularClass {
  std::size_t subgroup_index;
  std::string label;
};

struct CatalogGroup {
  std::string label;
  AbstractGroup group;
};

// One representative per isomorphism class of groups of order 2^e having a
// cyclic subgroup of index 2 (identity-only marking).
std::vector<CatalogGroup> cyclic_index2_catalog(int e);

// Decides by exhaustive search whether a marked group embeds as
// (T, Stab_T(1_N)) for a transitive T <= Hol(N). The transitive subgroups
// and their Cayley tables are built once in the constructor; afterwards the
// object is read-only and safe to share across threads.
class Oracle {
 public:
  explicit Oracle(LatticePtr lattice);

  const SubgroupLattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }

  // Lattice indices, ascending.
  std::vector<std::size_t> transitive_subgroups_of_order(std::size_t m) const;
  // T with its point stabilizer marked; `lattice_index` must be transitive.
  const AbstractGroup& abstract_transitive(std::size_t lattice_index) const;
  bool is_class_representative(std::size_t lattice_index) const;

  OracleAnswer admits_cyclic_type(const AbstractGroup& gq, const OracleOptions& options = {}) const;

  std::vector<RegularClass> regular_subgroups() const;

 private:
  struct Entry {
    std::size_t index;
    AbstractGroup group;
    std::vector<ElementKey> signature;
    bool class_rep;
  };
  const Entry& entry(std::size_t lattice_index) const;

  LatticePtr lattice_;
  std::vector<Entry> entries_;
};

}  // namespace holgal
