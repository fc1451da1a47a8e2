#include "holgal/cli/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "holgal/holomorph.hpp"
#include "holgal/residue.hpp"

namespace holgal::cli {

namespace {

using Index = AbstractGroup::Index;

// Counts checks and keeps the first counterexample.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void pass() { ++checked_; }
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (!ok) {
      ++failures_;
      if (counterexample_.empty()) counterexample_ = describe();
    }
  }

  PropertyResult result(const std::string& scope) const {
    PropertyResult r{name_, Status::Pass, {}};
    if (failures_ > 0) {
      r.status = Status::Fail;
      r.detail = std::to_string(failures_) + " of " + std::to_string(checked_) +
                 " checks failed; first counterexample: " + counterexample_;
    } else {
      r.detail = scope + " (" + std::to_string(checked_) + " checks)";
    }
    return r;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string counterexample_;
};

std::vector<HolElement> all_elements(const GroupContext& ctx) {
  std::vector<HolElement> out;
  for (Residue u = 0; u < ctx.n(); ++u) {
    for (Residue a : ctx.units()) out.push_back({u, a});
  }
  return out;
}

std::string str(const Subgroup& s) { return s.to_string(); }

Subgroup subgroup_core(const Subgroup& g, const Subgroup& h) { return core(g, h); }

AbstractGroup pair_quotient(const SubgroupLattice& lattice, std::size_t gi, std::size_t hi) {
  const Subgroup& g = lattice[gi];
  const Subgroup& h = lattice[hi];
  return quotient(g, subgroup_core(g, h), h);
}

bool is_p_power(std::size_t m, Residue p) {
  while (m % static_cast<std::size_t>(p) == 0) m /= static_cast<std::size_t>(p);
  return m == 1;
}

std::vector<std::size_t> subgroups_inside(const SubgroupLattice& lattice, const Subgroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (lattice[i].order() <= g.order() && lattice[i].is_subgroup_of(g)) out.push_back(i);
  }
  return out;
}

std::string pair_name(const Verdict& v) {
  return "G#" + std::to_string(v.g_index) + ", H#" + std::to_string(v.h_index);
}

}  // namespace

std::string format_result(const PropertyResult& r) {
  const char* status = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "FLAG";
  std::string line = r.name + ": " + status;
  if (!r.detail.empty()) line += " " + r.detail;
  return line;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const PropertyResult& r) { return r.status == Status::Fail; });
}

std::vector<PropertyResult> residue_properties(const GroupContext& ctx) {
  const Residue p = ctx.p();
  const Residue n = ctx.n();
  const std::uint64_t k_max = 4 * static_cast<std::uint64_t>(n);
  Check valuation("valuation lemma");
  Check sums("geometric sum");
  Check orders("unit order");

  for (Residue a : ctx.units()) {
    BigInt exact = 0;
    BigInt power = 1;
    for (std::uint64_t k = 0; k <= k_max; ++k) {
      const Residue modular = s_sum(a, k, ctx);
      const auto expected = static_cast<Residue>(exact % n);
      sums.expect(modular == expected, [&] {
        return "S(" + std::to_string(a) + ", " + std::to_string(k) + ") mod n = " + std::to_string(modular) +
               ", exact gives " + std::to_string(expected);
      });
      sums.expect(s_valuation_mod(a, k, ctx) == vp_mod(expected, ctx), [&] {
        return "capped valuation of S(" + std::to_string(a) + ", " + std::to_string(k) + ")";
      });
      if (a % p == 1) {
        const Valuation closed = s_valuation(a, k, p);
        const Valuation truth = vp(exact, p);
        valuation.expect(closed == truth, [&] {
          return "v_p(S(" + std::to_string(a) + ", " + std::to_string(k) + ")) closed form " + closed.to_string() +
                 ", exact " + truth.to_string();
        });
      }
      exact += power;
      power *= a;
    }

    const std::uint64_t t = unit_order(a, ctx);
    bool minimal = ctx.power(a, t) == 1;
    for (std::uint64_t d = 1; d < t && minimal; ++d) minimal = ctx.power(a, d) != 1;
    orders.expect(minimal && ctx.units().size() % t == 0,
                  [&] { return "order of " + std::to_string(a) + " reported as " + std::to_string(t); });
    if (p == 2 && ctx.e() >= 3 && a % 4 == 1) {
      const std::uint64_t bound = std::uint64_t{1} << (ctx.e() - 2);
      orders.expect(bound % t == 0,
                    [&] { return std::to_string(a) + " = 1 mod 4 has order " + std::to_string(t); });
    }
  }
  const std::string scope = "over all units, k <= " + std::to_string(k_max);
  return {valuation.result(scope), sums.result(scope), orders.result("over all units")};
}

std::vector<PropertyResult> holomorph_properties(const GroupContext& ctx) {
  const Residue n = ctx.n();
  const auto elements = all_elements(ctx);
  const HolElement id = kIdentity;
  Check power("power formula");
  Check order("order lemma");
  Check comm("commutator identity");
  Check action("action law");
  Check commuting("commute criterion");

  for (const auto& g : elements) {
    HolElement iter = id;
    std::uint64_t first_identity = 0;
    const std::uint64_t k_max = 2 * static_cast<std::uint64_t>(n);
    for (std::uint64_t k = 0; k <= k_max || first_identity == 0; ++k) {
      if (k <= k_max) {
        const HolElement fast = pow(g, k, ctx);
        power.expect(fast == iter, [&] {
          return to_string(g) + "^" + std::to_string(k) + " = " + to_string(fast) + ", iterated " + to_string(iter);
        });
      }
      if (k > 0 && first_identity == 0 && iter == id) first_identity = k;
      iter = mul(iter, g, ctx);
    }
    const std::uint64_t closed = element_order(g, ctx);
    order.expect(closed == first_identity, [&] {
      return "|" + to_string(g) + "| = " + std::to_string(closed) + ", iterated " + std::to_string(first_identity);
    });
  }

  for (const auto& g : elements) {
    for (const auto& h : elements) {
      const HolElement c = commutator(g, h, ctx);
      const HolElement expected{ctx.reduce(g.u * (h.a - 1) - h.u * (g.a - 1)), 1};
      comm.expect(c == expected, [&] { return "[" + to_string(g) + ", " + to_string(h) + "] = " + to_string(c); });
      const bool by_table = mul(g, h, ctx) == mul(h, g, ctx);
      const bool by_congruence = ctx.reduce(g.u * (h.a - 1) - h.u * (g.a - 1)) == 0;
      commuting.expect(commute(g, h, ctx) == by_table && by_table == by_congruence,
                       [&] { return to_string(g) + " and " + to_string(h); });
      const HolElement gh = mul(g, h, ctx);
      for (Residue x = 0; x < n; ++x) {
        action.expect(act(gh, x, ctx) == act(g, act(h, x, ctx), ctx), [&] {
          return to_string(g) + " . " + to_string(h) + " at " + std::to_string(x);
        });
      }
    }
  }
  const std::string all = "over all elements";
  return {power.result(all + ", k <= 2n"), order.result(all), comm.result("over all pairs"),
          action.result("over all pairs and points"), commuting.result("over all pairs")};
}

std::vector<PropertyResult> lattice_properties(const SubgroupLattice& lattice) {
  const Holomorph& hol = lattice.holomorph();
  const auto n = static_cast<std::size_t>(lattice.context().n());
  Check lagrange("Lagrange");
  Check closed("subgroup closure");
  Check core_max("core maximality");
  Check cap_n("N-intersection in core");
  Check iso("isomorphism search vs exhaustive");

  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& s = lattice[i];
    lagrange.expect(hol.order() % s.order() == 0, [&] { return str(s); });
    bool ok = s.contains(Holomorph::identity());
    for (ElemId x : s.ids()) {
      if (!s.contains(hol.inv(x))) ok = false;
      for (ElemId y : s.ids()) {
        if (!s.contains(hol.mul(x, y))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    closed.expect(ok && (i == 0 || lattice[i - 1] < s), [&] { return str(s); });
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t gi : lattice.transitive()) {
    const Subgroup& g = lattice[gi];
    const auto inside = subgroups_inside(lattice, g);
    for (std::size_t hi : lattice.subgroups_of(g, g.order() / n)) {
      pairs.emplace_back(gi, hi);
      const Subgroup& h = lattice[hi];
      const Subgroup c = core(g, h);
      bool ok = is_normal(g, c) && c.is_subgroup_of(h);
      for (std::size_t ki : inside) {
        const Subgroup& k = lattice[ki];
        if (k.is_subgroup_of(h) && is_normal(g, k) && !k.is_subgroup_of(c)) ok = false;
      }
      core_max.expect(ok, [&] { return "G = " + str(g) + ", H = " + str(h); });
      cap_n.expect(n_intersection(h).is_subgroup_of(c), [&] { return "G = " + str(g) + ", H = " + str(h); });
    }
  }

  std::vector<AbstractGroup> targets;
  for (std::size_t ti : lattice.transitive()) {
    if (lattice[ti].order() <= 16) targets.push_back(abstract_with_stabilizer(lattice[ti]));
  }
  std::vector<AbstractGroup> sources = targets;
  for (auto [gi, hi] : pairs) {
    if (lattice[gi].order() / core(lattice[gi], lattice[hi]).order() <= 16) {
      sources.push_back(pair_quotient(lattice, gi, hi));
    }
  }
  for (const auto& a : sources) {
    for (const auto& b : targets) {
      if (a.size() != b.size()) continue;
      const auto f = find_isomorphism(a, b);
      const bool brute = brute_force_isomorphic(a, b);
      iso.expect(f.has_value() == brute && (!f || is_isomorphism(a, b, *f)), [&] {
        return "order " + std::to_string(a.size()) + ": search " + (f ? "found" : "none") + ", exhaustive " +
               (brute ? "found" : "none");
      });
    }
  }

  return {lagrange.result("over all " + std::to_string(lattice.size()) + " subgroups"),
          closed.result("over all subgroups"),
          core_max.result("over all index-n pairs"),
          cap_n.result("over all index-n pairs"),
          iso.result("over all marked groups of order <= 16")};
}

std::vector<PropertyResult> hall_properties(const SubgroupLattice& lattice) {
  const Residue p = lattice.context().p();
  Check transitive("Hall transitivity");
  if (p == 2) {
    Check whole("Hall part is whole group");
    for (std::size_t gi = 0; gi < lattice.size(); ++gi) {
      whole.expect(hall_p_part(lattice[gi]) == lattice[gi], [&] { return str(lattice[gi]); });
    }
    return {whole.result("over all subgroups")};
  }

  Check index("index identity");
  Check transfer("Hall transfer");
  for (std::size_t gi : lattice.transitive()) {
    const Subgroup& g = lattice[gi];
    const Subgroup gq = hall_p_part(g);
    transitive.expect(is_transitive(gq), [&] { return str(g); });

    std::vector<std::size_t> candidates;
    for (std::size_t hi : subgroups_inside(lattice, g)) {
      if (is_p_power(g.order() / lattice[hi].order(), p)) candidates.push_back(hi);
    }
    std::map<std::size_t, Subgroup> q_parts;
    for (std::size_t hi : candidates) {
      const Subgroup& h = lattice[hi];
      const Subgroup hq = hall_p_part(h);
      index.expect(g.order() / h.order() == gq.order() / hq.order(),
                   [&] { return "G = " + str(g) + ", H = " + str(h); });
      q_parts.emplace(hi, hq);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const Subgroup& h1 = lattice[candidates[i]];
        const Subgroup& h2 = lattice[candidates[j]];
        if (h1.order() != h2.order()) continue;
        const bool whole = are_conjugate(g, h1, h2);
        const bool parts = are_conjugate(g, q_parts.at(candidates[i]), q_parts.at(candidates[j]));
        transfer.expect(whole == parts, [&] { return "G = " + str(g) + ", " + str(h1) + " vs " + str(h2); });
      }
    }
  }
  return {transitive.result("over all transitive G"), index.result("over all p-power-index H"),
          transfer.result("over all equal-order p-power-index pairs")};
}

std::vector<PropertyResult> oracle_properties(const Oracle& oracle, const std::vector<PairReport>& reports) {
  const SubgroupLattice& lattice = oracle.lattice();
  const auto& ctx = lattice.context();
  Check self("stabilizer self-witness");
  Check conj("conjugation soundness");
  Check prefilter("order prefilter");
  Check reduction("conjugacy reduction");
  Check witness("witness validity");

  for (std::size_t gi : lattice.transitive()) {
    const Subgroup& g = lattice[gi];
    const Subgroup st = stabilizer(g);
    self.expect(oracle.admits_cyclic_type(quotient(g, core(g, st), st)).admits, [&] { return str(g); });
  }

  std::map<std::size_t, std::vector<const PairReport*>> by_g;
  for (const auto& r : reports) by_g[r.verdict.g_index].push_back(&r);
  for (const auto& [gi, list] : by_g) {
    const Subgroup& g = lattice[gi];
    std::vector<const PairReport*> reps;
    for (const PairReport* r : list) {
      const Subgroup& h = lattice[r->verdict.h_index];
      for (const PairReport* rep : reps) {
        if (are_conjugate(g, lattice[rep->verdict.h_index], h)) {
          conj.expect(rep->verdict.oracle == r->verdict.oracle, [&] { return pair_name(r->verdict); });
          goto next;
        }
      }
      reps.push_back(r);
    next:;
    }
  }

  const std::uint64_t half = static_cast<std::uint64_t>(ctx.n()) / 2;
  for (const auto& r : reports) {
    const AbstractGroup q = pair_quotient(lattice, r.verdict.g_index, r.verdict.h_index);
    const bool answer = r.verdict.oracle.value_or(false);
    if (ctx.p() == 2) {
      const bool unfiltered = oracle.admits_cyclic_type(q, {false, true}).admits;
      prefilter.expect(unfiltered == answer && (q.has_element_of_order(half) || !answer),
                       [&] { return pair_name(r.verdict); });
    }
    const bool all_targets = oracle.admits_cyclic_type(q, {true, false}).admits;
    reduction.expect(all_targets == answer, [&] { return pair_name(r.verdict); });
    if (r.answer && r.answer->admits) {
      const bool ok = r.answer->witness &&
                      is_isomorphism(q, oracle.abstract_transitive(*r.answer->witness), r.answer->isomorphism);
      witness.expect(ok, [&] { return pair_name(r.verdict); });
    }
  }

  std::vector<PropertyResult> out{self.result("over all transitive G"), conj.result("over all conjugate H pairs")};
  if (ctx.p() == 2) out.push_back(prefilter.result("over all pairs"));
  out.push_back(reduction.result("over all pairs"));
  out.push_back(witness.result("over all admitting pairs"));
  return out;
}

std::vector<PropertyResult> criteria_properties(const Oracle& oracle, const std::vector<PairReport>& reports) {
  const SubgroupLattice& lattice = oracle.lattice();
  const auto& ctx = lattice.context();
  const auto n = static_cast<std::size_t>(ctx.n());
  const bool even = ctx.p() == 2;
  Check equivalence(even ? "p = 2 equivalence" : "odd equivalence");
  Check labels("case labels");

  for (const auto& r : reports) {
    const Verdict& v = r.verdict;
    equivalence.expect(v.agree.value_or(false), [&] {
      return pair_name(v) + ": criteria " + (v.criteria ? "admit" : "reject") + " (" +
             std::string(to_string(v.label)) + "), oracle disagrees";
    });
    labels.expect((v.label == CaseLabel::Admits) == v.criteria, [&] { return pair_name(v); });
  }
  std::vector<PropertyResult> out{equivalence.result("over all " + std::to_string(reports.size()) + " pairs"),
                                  labels.result("over all pairs")};

  if (!even) {
    Check stab("non-admitting H not conjugate to stabilizer");
    for (const auto& r : reports) {
      if (!r.verdict.oracle.value_or(true)) stab.expect(!r.verdict.h_conj_stab, [&] { return pair_name(r.verdict); });
    }
    Check full("full-order element");
    for (std::size_t gi : lattice.transitive()) {
      if (!is_p_power(lattice[gi].order(), ctx.p())) continue;
      full.expect(has_element_of_order(lattice[gi], n), [&] { return str(lattice[gi]); });
    }
    out.push_back(stab.result("over all rejected pairs"));
    out.push_back(full.result("over all transitive p-subgroups"));
    return out;
  }

  Check large("|H cap N| >= 4 rejects");
  Check two("|H cap N| = 2 criterion");
  for (const auto& r : reports) {
    const Verdict& v = r.verdict;
    const bool oracle_answer = v.oracle.value_or(false);
    if (v.h_cap_n >= 4) large.expect(!oracle_answer, [&] { return pair_name(v); });
    if (v.h_cap_n == 2) {
      two.expect(oracle_answer == (v.has_full_order_elem && v.h_normal), [&] { return pair_name(v); });
    }
  }

  Check dich("dichotomy");
  std::map<std::size_t, std::vector<const PairReport*>> by_g;
  for (const auto& r : reports) by_g[r.verdict.g_index].push_back(&r);
  for (std::size_t gi : lattice.transitive()) {
    const Subgroup& g = lattice[gi];
    const Dichotomy d = dichotomy_case(g);
    if (d.kind == DichotomyKind::AllAdmit) {
      for (const PairReport* r : by_g[gi]) {
        dich.expect(r->verdict.oracle.value_or(false) && r->verdict.criteria, [&] { return pair_name(r->verdict); });
      }
    } else if (d.kind == DichotomyKind::WitnessFails) {
      const auto wi = d.witness ? lattice.index_of(*d.witness) : std::nullopt;
      const PairReport* hit = nullptr;
      for (const PairReport* r : by_g[gi]) {
        if (wi && r->verdict.h_index == *wi) hit = r;
      }
      dich.expect(hit && is_normal(g, *d.witness) && !hit->verdict.oracle.value_or(true) && !hit->verdict.criteria,
                  [&] { return "G = " + str(g) + ", s = " + std::to_string(d.s); });
    }
  }
  out.push_back(large.result("over all pairs"));
  out.push_back(two.result("over all pairs"));
  out.push_back(dich.result("over all transitive G with s >= 1"));
  return out;
}

std::vector<PropertyResult> structural_properties(const SubgroupLattice& lattice) {
  const auto& ctx = lattice.context();
  if (ctx.p() != 2) return {};
  const auto n = static_cast<std::size_t>(ctx.n());
  Check half("half-order element");
  Check congruence("transitivity congruence");
  Check centre("center lemma");
  Check identity("center–commutator identity");
  Check centralizers("centralizer lemma");

  for (std::size_t gi : lattice.transitive()) {
    const Subgroup& g = lattice[gi];
    const StructuralStats st = structural_probes(g);
    const auto where = [&] { return str(g); };
    half.expect(n < 2 || st.has_half_order_element, where);
    if (!st.has_full_order_element) congruence.expect(st.congruence_mod4 && st.stabilizer_in_phi5, where);
    if (!is_regular(g)) {
      centre.expect(st.center_has_top_translation && st.center_cyclic, where);
      if (!st.has_full_order_element) centre.expect(st.center_has_order4_probe, where);
      identity.expect(st.center_order * st.derived_order == n, [&] {
        return str(g) + ": |Z| = " + std::to_string(st.center_order) + ", |[G,G]| = " +
               std::to_string(st.derived_order);
      });
    }
    if (g.order() == 2 * n && st.centralizer_of_phi_top) {
      centralizers.expect(*st.centralizer_of_phi_top == n, where);
      for (const auto& rc : st.reflections) {
        centralizers.expect(rc.order <= n && (rc.order < n) == rc.non_congruence, [&] {
          return str(g) + ": |C(" + to_string(rc.element) + ")| = " + std::to_string(rc.order);
        });
      }
    }
  }
  return {half.result("over all transitive G"), congruence.result("over all transitive G without order-n elements"),
          centre.result("over all non-regular transitive G"), identity.result("over all non-regular transitive G"),
          centralizers.result("over all transitive G of order 2n containing the top automorphism")};
}

std::vector<PropertyResult> rump_properties(const Oracle& oracle) {
  const auto& ctx = oracle.lattice().context();
  const auto regular = oracle.regular_subgroups();
  std::set<std::string> found;
  for (const auto& r : regular) found.insert(r.label);

  std::set<std::string> expected;
  if (ctx.p() == 2) {
    for (const auto& c : cyclic_index2_catalog(ctx.e())) expected.insert(c.label);
  } else {
    expected.insert("cyclic");
  }

  std::string set = "{";
  for (const auto& label : found) set += (set.size() > 1 ? ", " : "") + label;
  set += "}";
  PropertyResult r{"regular iso-classes: " + set, Status::Pass, {}};
  const std::string count = std::to_string(regular.size()) + " regular subgroups";
  if (ctx.p() == 2 && ctx.e() == 2) {
    r.status = Status::Flag;
    r.detail = count + "; the cyclic-of-order-4 exception clause is not asserted at e = 2";
  } else if (found != expected) {
    r.status = Status::Fail;
    r.detail = count + "; expected exactly the catalog classes";
  } else {
    r.detail = count + ", matching the expected classes";
  }
  return {r};
}

bool brute_force_isomorphic(const AbstractGroup& a, const AbstractGroup& b) {
  const std::size_t m = a.size();
  if (m != b.size() || a.marked_count() != b.marked_count()) return false;

  std::vector<Index> gens;
  std::vector<bool> span(m, false);
  span[0] = true;
  std::vector<std::pair<Index, std::size_t>> parent(m, {0, 0});  // x = parent.first * gens[parent.second]
  std::vector<Index> order_of_discovery{0};
  for (Index x = 0; x < m; ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    std::fill(span.begin(), span.end(), false);
    span[0] = true;
    order_of_discovery.assign(1, 0);
    for (std::size_t head = 0; head < order_of_discovery.size(); ++head) {
      const Index y = order_of_discovery[head];
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const Index z = a.mul(y, gens[gi]);
        if (!span[z]) {
          span[z] = true;
          parent[z] = {y, gi};
          order_of_discovery.push_back(z);
        }
      }
    }
  }

  std::vector<Index> images(gens.size());
  std::vector<Index> f(m);
  std::vector<bool> used(m);
  const auto try_images = [&] {
    f[0] = 0;
    for (std::size_t i = 1; i < order_of_discovery.size(); ++i) {
      const Index x = order_of_discovery[i];
      f[x] = b.mul(f[parent[x].first], images[parent[x].second]);
    }
    std::fill(used.begin(), used.end(), false);
    for (Index x = 0; x < m; ++x) {
      if (used[f[x]] || a.is_marked(x) != b.is_marked(f[x])) return false;
      used[f[x]] = true;
    }
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t depth) {
    if (depth == gens.size()) return try_images();
    for (Index y = 0; y < m; ++y) {
      if (b.element_order(y) != a.element_order(gens[depth]) || b.is_marked(y) != a.is_marked(gens[depth])) continue;
      images[depth] = y;
      if (assign(depth + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

}  // namespace holgal::cli
