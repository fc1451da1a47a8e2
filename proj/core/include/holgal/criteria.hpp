#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "holgal/oracle.hpp"
#include "holgal/subgroup.hpp"

namespace holgal {

// Outcome labels of the closed-form classification. The CASE_* labels are
// the four failure conditions for p = 2, keyed on |H cap N|.
enum class CaseLabel { Admits, CaseI, CaseII, CaseIII, CaseIV, OddNotConjugate };

std::string_view to_string(CaseLabel label);

// p odd: H admits iff it is conjugate in G to the point stabilizer.
// Throws ParameterError for p = 2 or when [G:H] != p^e or G is not transitive.
bool odd_predicate(const Subgroup& g, const Subgroup& h);

struct EvenPredicate {
  bool admits;
  CaseLabel label;
};

// p = 2 classification of (G, H), [G:H] = 2^e. When both CASE_II and
// CASE_III apply, CASE_II is reported.
EvenPredicate even_predicate(const Subgroup& g, const Subgroup& h);

enum class DichotomyKind {
  Irrelevant,   // s = 0
  AllAdmit,     // s = 1 with an element of order 2^e
  WitnessFails  // otherwise; `witness` is a normal H of index 2^e that fails
};

struct Dichotomy {
  int s;
  bool has_full_order_element;
  DichotomyKind kind;
  std::optional<Subgroup> witness;
};

Dichotomy dichotomy_case(const Subgroup& g);

struct ReflectionCentralizer {
  HolElement element;        // (u, n-1) with u odd
  std::size_t order;         // |C_G(element)|
  bool non_congruence;       // u(b-1) != -2v mod 2^{e-1} for some (v, b) in G
};

// Structural statistics of a transitive G <= Hol(C_{2^e}).
struct StructuralStats {
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  bool center_cyclic = false;
  bool center_has_top_translation = false;  // sigma^{2^{e-1}} in Z(G)
  bool has_full_order_element = false;
  bool has_half_order_element = false;      // some element of order 2^{e-1}
  bool congruence_mod4 = false;             // b - 1 = 2v mod 4 for all (v, b)
  bool stabilizer_in_phi5 = false;          // every stabilizer a = 1 mod 4
  bool center_has_order4_probe = false;     // (2^{e-2}, 1+2^{e-1}) in Z(G)
  std::optional<std::size_t> centralizer_of_phi_top;  // |C_G(phi_{1+2^{e-1}})|
  std::vector<ReflectionCentralizer> reflections;
};

StructuralStats structural_probes(const Subgroup& g);

struct Verdict {
  Residue p = 0;
  int e = 0;
  std::size_t g_index = 0;
  std::size_t h_index = 0;
  std::size_t g_order = 0;
  std::size_t h_order = 0;
  std::size_t h_cap_n = 0;
  std::size_t g_cap_n = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  int s = 0;
  bool has_full_order_elem = false;
  bool h_normal = false;
  bool h_conj_stab = false;
  CaseLabel label = CaseLabel::Admits;
  std::optional<bool> oracle;
  bool criteria = false;
  std::optional<bool> agree;
};

struct PairReport {
  Verdict verdict;
  std::optional<OracleAnswer> answer;
};

// Classifies lattice[g_index] with subgroup lattice[h_index]. Pass a null
// oracle to evaluate the criteria only.
PairReport evaluate_pair(const SubgroupLattice& lattice, const Oracle* oracle,
                         std::size_t g_index, std::size_t h_index);

}  // namespace holgal
