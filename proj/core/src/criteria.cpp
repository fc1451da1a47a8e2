#include "holgal/criteria.hpp"

#include <algorithm>

#include "holgal/errors.hpp"

namespace holgal {

namespace {

void require_pair(const Subgroup& g, const Subgroup& h) {
  const auto n = static_cast<std::size_t>(g.context().n());
  if (!is_transitive(g)) throw ParameterError("G is not transitive");
  if (!h.is_subgroup_of(g)) throw ParameterError("H is not contained in G");
  if (g.order() != n * h.order()) throw ParameterError("[G:H] is not p^e");
}

int log_p(std::size_t m, std::size_t p) {
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

// Id of (u, a) if it is a valid element, else nullopt.
std::optional<ElemId> try_id(const Holomorph& hol, Residue u, Residue a) {
  const auto& ctx = hol.context();
  const HolElement g{ctx.reduce(u), ctx.reduce(a)};
  if (!is_valid(g, ctx)) return std::nullopt;
  return hol.id(g);
}

bool is_cyclic(const Subgroup& g) {
  const auto& hol = g.holomorph();
  return std::any_of(g.ids().begin(), g.ids().end(),
                     [&](ElemId x) { return hol.element_order(x) == g.order(); });
}

}  // namespace

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::Admits: return "ADMITS";
    case CaseLabel::CaseI: return "CASE_I";
    case CaseLabel::CaseII: return "CASE_II";
    case CaseLabel::CaseIII: return "CASE_III";
    case CaseLabel::CaseIV: return "CASE_IV";
    case CaseLabel::OddNotConjugate: return "ODD_NOT_CONJUGATE";
  }
  return "?";
}

bool odd_predicate(const Subgroup& g, const Subgroup& h) {
  if (g.context().p() == 2) throw ParameterError("odd_predicate needs p odd");
  require_pair(g, h);
  return are_conjugate(g, h, stabilizer(g));
}

EvenPredicate even_predicate(const Subgroup& g, const Subgroup& h) {
  const auto& ctx = g.context();
  if (ctx.p() != 2) throw ParameterError("even_predicate needs p = 2");
  require_pair(g, h);
  const auto& hol = g.holomorph();
  const auto n = static_cast<std::size_t>(ctx.n());

  const std::size_t h_cap_n = n_intersection(h).order();
  if (h_cap_n >= 4) return {false, CaseLabel::CaseI};
  if (h_cap_n == 2) {
    if (!has_element_of_order(g, n)) return {false, CaseLabel::CaseII};
    if (!is_normal(g, h)) return {false, CaseLabel::CaseIII};
    return {true, CaseLabel::Admits};
  }

  // |H cap N| = 1: only the reflection case can fail.
  if (h.order() != 2) return {true, CaseLabel::Admits};
  const HolElement r = hol.element(h.ids()[1]);
  if (r.a != ctx.n() - 1 || r.u % 2 == 0) return {true, CaseLabel::Admits};
  if (g.order() != 2 * n) return {true, CaseLabel::Admits};
  const auto phi_top = try_id(hol, 0, 1 + ctx.n() / 2);
  const Subgroup stab = stabilizer(g);
  if (!phi_top || stab.order() != 2 || !stab.contains(*phi_top)) return {true, CaseLabel::Admits};
  const std::size_t g_cap_n = n_intersection(g).order();
  if (g_cap_n >= 8 || (g_cap_n == 4 && derived_subgroup(g).order() == 4)) {
    return {false, CaseLabel::CaseIV};
  }
  return {true, CaseLabel::Admits};
}

Dichotomy dichotomy_case(const Subgroup& g) {
  const auto& ctx = g.context();
  if (ctx.p() != 2) throw ParameterError("dichotomy_case needs p = 2");
  if (!is_transitive(g)) throw ParameterError("G is not transitive");
  const auto n = static_cast<std::size_t>(ctx.n());
  Dichotomy d{log_p(g.order() / n, 2), has_element_of_order(g, n), DichotomyKind::Irrelevant,
              std::nullopt};
  if (d.s == 0) return d;
  if (d.s == 1 && d.has_full_order_element) {
    d.kind = DichotomyKind::AllAdmit;
    return d;
  }
  d.kind = DichotomyKind::WitnessFails;
  const HolElement gen{ctx.reduce(Residue{1} << (ctx.e() - d.s)), 1};
  const HolElement gens[] = {gen};
  d.witness = closure(g.holomorph_ptr(), gens);
  return d;
}

StructuralStats structural_probes(const Subgroup& g) {
  const auto& ctx = g.context();
  if (ctx.p() != 2) throw ParameterError("structural_probes needs p = 2");
  const auto& hol = g.holomorph();
  const Residue n = ctx.n();
  StructuralStats st;

  const Subgroup z = center(g);
  st.center_order = z.order();
  st.derived_order = derived_subgroup(g).order();
  st.center_cyclic = is_cyclic(z);
  if (auto top = try_id(hol, n / 2, 1)) st.center_has_top_translation = z.contains(*top);
  st.has_full_order_element = has_element_of_order(g, static_cast<std::uint64_t>(n));
  st.has_half_order_element = has_element_of_order(g, static_cast<std::uint64_t>(n / 2));

  st.congruence_mod4 = true;
  st.stabilizer_in_phi5 = true;
  for (ElemId x : g.ids()) {
    const HolElement el = hol.element(x);
    if (((el.a - 1) - 2 * el.u) % 4 != 0) st.congruence_mod4 = false;
    if (el.u == 0 && el.a % 4 != 1) st.stabilizer_in_phi5 = false;
  }

  if (ctx.e() >= 2) {
    if (auto probe = try_id(hol, n / 4, 1 + n / 2)) st.center_has_order4_probe = z.contains(*probe);
  }

  const auto phi_top = try_id(hol, 0, 1 + n / 2);
  if (phi_top && g.contains(*phi_top)) st.centralizer_of_phi_top = centralizer(g, *phi_top).order();

  for (ElemId x : g.ids()) {
    const HolElement el = hol.element(x);
    if (el.a != n - 1 || el.u % 2 == 0) continue;
    ReflectionCentralizer rc{el, centralizer(g, x).order(), false};
    const Residue half = n / 2;
    for (ElemId y : g.ids()) {
      const HolElement w = hol.element(y);
      const Residue lhs = el.u * (w.a - 1) + 2 * w.u;
      if (((lhs % half) + half) % half != 0) {
        rc.non_congruence = true;
        break;
      }
    }
    st.reflections.push_back(rc);
  }
  return st;
}

PairReport evaluate_pair(const SubgroupLattice& lattice, const Oracle* oracle, std::size_t g_index,
                         std::size_t h_index) {
  const Subgroup& g = lattice[g_index];
  const Subgroup& h = lattice[h_index];
  require_pair(g, h);
  const auto& ctx = lattice.context();
  const auto n = static_cast<std::size_t>(ctx.n());

  PairReport report;
  Verdict& v = report.verdict;
  v.p = ctx.p();
  v.e = ctx.e();
  v.g_index = g_index;
  v.h_index = h_index;
  v.g_order = g.order();
  v.h_order = h.order();
  v.h_cap_n = n_intersection(h).order();
  v.g_cap_n = n_intersection(g).order();
  v.center_order = center(g).order();
  v.derived_order = derived_subgroup(g).order();
  v.s = log_p(g.order(), static_cast<std::size_t>(ctx.p())) - ctx.e();
  v.has_full_order_elem = has_element_of_order(g, n);
  v.h_normal = is_normal(g, h);
  v.h_conj_stab = are_conjugate(g, h, stabilizer(g));

  if (ctx.p() == 2) {
    const EvenPredicate ep = even_predicate(g, h);
    v.criteria = ep.admits;
    v.label = ep.label;
  } else {
    v.criteria = v.h_conj_stab;
    v.label = v.criteria ? CaseLabel::Admits : CaseLabel::OddNotConjugate;
  }

  if (oracle != nullptr) {
    const Subgroup c = core(g, h);
    OracleAnswer ans = oracle->admits_cyclic_type(quotient(g, c, h));
    v.oracle = ans.admits;
    v.agree = ans.admits == v.criteria;
    report.answer = std::move(ans);
  }
  return report;
}

}  // namespace holgal
