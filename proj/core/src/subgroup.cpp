#include "holgal/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "holgal/errors.hpp"

namespace holgal {

namespace {

using Mask = boost::dynamic_bitset<>;

bool is_prime_power(std::size_t m) {
  if (m < 2) return true;
  std::size_t p = 2;
  while (m % p != 0) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

void require_contained(const Subgroup& g, const Subgroup& h) {
  if (!h.is_subgroup_of(g)) throw ParameterError("subgroup " + h.to_string() + " is not contained in G");
}

// Elements reachable from the identity by right multiplication by gens.
Mask close_mask(const Holomorph& hol, std::span<const ElemId> gens) {
  Mask mask(hol.order());
  std::vector<ElemId> queue{Holomorph::identity()};
  mask.set(Holomorph::identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElemId g : gens) {
      const ElemId y = hol.mul(queue[i], g);
      if (!mask.test(y)) {
        mask.set(y);
        queue.push_back(y);
      }
    }
  }
  return mask;
}

struct IdsHash {
  std::size_t operator()(const std::vector<ElemId>& ids) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (ElemId x : ids) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace

// --- Holomorph -------------------------------------------------------------

Holomorph::Holomorph(const GroupContext& ctx) : ctx_(ctx) {
  const auto& units = ctx_.units();
  const std::size_t m = static_cast<std::size_t>(ctx_.n()) * units.size();
  p_group_ = is_prime_power(m);
  elements_.reserve(m);
  for (Residue u = 0; u < ctx_.n(); ++u) {
    for (Residue a : units) elements_.push_back({u, a});
  }
  table_.resize(m * m);
  inverse_.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    const HolElement& g = elements_[x];
    for (std::size_t y = 0; y < m; ++y) {
      const HolElement& h = elements_[y];
      const HolElement gh{ctx_.reduce(g.u + h.u * g.a), ctx_.mul(g.a, h.a)};
      table_[x * m + y] = id(gh);
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (table_[x * m + y] == identity()) {
        inverse_[x] = static_cast<ElemId>(y);
        break;
      }
    }
  }
  orders_.resize(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::uint32_t t = 1;
    for (ElemId y = static_cast<ElemId>(x); y != identity(); y = mul(y, static_cast<ElemId>(x))) ++t;
    orders_[x] = t;
  }
}

std::shared_ptr<const Holomorph> Holomorph::create(const GroupContext& ctx, std::size_t max_order) {
  const std::size_t m = static_cast<std::size_t>(ctx.n()) * ctx.units().size();
  if (m > max_order) throw CapacityError(m, max_order);
  return std::shared_ptr<const Holomorph>(new Holomorph(ctx));
}

ElemId Holomorph::id(const HolElement& g) const {
  if (!is_valid(g, ctx_)) throw ParameterError("element " + to_string(g) + " is not in this holomorph");
  return static_cast<ElemId>(static_cast<std::size_t>(g.u) * unit_count() +
                             static_cast<std::size_t>(ctx_.unit_rank(g.a)));
}

// --- Subgroup --------------------------------------------------------------

Subgroup::Subgroup(HolPtr hol, Mask mask) : hol_(std::move(hol)), mask_(std::move(mask)) {
  ids_.reserve(mask_.count());
  for (auto x = mask_.find_first(); x != Mask::npos; x = mask_.find_next(x)) {
    ids_.push_back(static_cast<ElemId>(x));
  }
  // Greedy generating set: repeatedly take an element of largest order
  // outside the span so far.
  std::vector<ElemId> by_order = ids_;
  std::stable_sort(by_order.begin(), by_order.end(), [this](ElemId x, ElemId y) {
    return hol_->element_order(x) > hol_->element_order(y);
  });
  Mask span(hol_->order());
  span.set(Holomorph::identity());
  for (ElemId x : by_order) {
    if (span.test(x)) continue;
    gens_.push_back(x);
    span = close_mask(*hol_, gens_);
    if (span.count() == ids_.size()) break;
  }
}

std::vector<HolElement> Subgroup::elements() const {
  std::vector<HolElement> out;
  out.reserve(ids_.size());
  for (ElemId x : ids_) out.push_back(hol_->element(x));
  return out;
}

bool Subgroup::contains(const HolElement& g) const {
  return is_valid(g, context()) && contains(hol_->id(g));
}

std::string Subgroup::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i != 0) s += ", ";
    s += holgal::to_string(hol_->element(ids_[i]));
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Subgroup& x, const Subgroup& y) {
  if (auto c = x.order() <=> y.order(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.ids_.begin(), x.ids_.end(), y.ids_.begin(),
                                                y.ids_.end());
}

// --- constructions ---------------------------------------------------------

Subgroup closure(const HolPtr& hol, std::span<const ElemId> gens) {
  return Subgroup(hol, close_mask(*hol, gens));
}

Subgroup closure(const HolPtr& hol, std::span<const HolElement> gens) {
  std::vector<ElemId> ids;
  ids.reserve(gens.size());
  for (const auto& g : gens) ids.push_back(hol->id(normalize(g, hol->context())));
  return closure(hol, ids);
}

Subgroup trivial_subgroup(const HolPtr& hol) {
  Mask m(hol->order());
  m.set(Holomorph::identity());
  return Subgroup(hol, std::move(m));
}

Subgroup whole_group(const HolPtr& hol) {
  Mask m(hol->order());
  m.set();
  return Subgroup(hol, std::move(m));
}

bool is_transitive(const Subgroup& g) {
  const auto& hol = g.holomorph();
  const auto n = static_cast<std::size_t>(hol.context().n());
  if (g.order() < n) return false;
  Mask seen(n);
  for (ElemId x : g.ids()) seen.set(static_cast<std::size_t>(hol.element(x).u));
  return seen.all();
}

Subgroup stabilizer(const Subgroup& g) {
  Mask m(g.holomorph().order());
  for (ElemId x : g.ids()) {
    if (g.holomorph().in_stabilizer(x)) m.set(x);
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

bool is_regular(const Subgroup& g) {
  return is_transitive(g) && g.order() == static_cast<std::size_t>(g.context().n());
}

Subgroup n_intersection(const Subgroup& g) {
  Mask m(g.holomorph().order());
  for (ElemId x : g.ids()) {
    if (g.holomorph().in_translations(x)) m.set(x);
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

Subgroup intersection(const Subgroup& x, const Subgroup& y) {
  return Subgroup(x.holomorph_ptr(), x.mask() & y.mask());
}

Subgroup conjugate(const Subgroup& h, ElemId x) {
  const auto& hol = h.holomorph();
  Mask m(hol.order());
  for (ElemId y : h.ids()) m.set(hol.conj(x, y));
  return Subgroup(h.holomorph_ptr(), std::move(m));
}

bool is_normal(const Subgroup& g, const Subgroup& h) {
  require_contained(g, h);
  const auto& hol = g.holomorph();
  for (ElemId x : g.generators()) {
    for (ElemId y : h.generators()) {
      if (!h.contains(hol.conj(x, y))) return false;
    }
  }
  return true;
}

Subgroup core(const Subgroup& g, const Subgroup& h) {
  require_contained(g, h);
  const auto& hol = g.holomorph();
  Mask m = h.mask();
  for (ElemId x : g.ids()) {
    Mask conj(hol.order());
    for (ElemId y : h.ids()) conj.set(hol.conj(x, y));
    m &= conj;
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

std::optional<ElemId> find_conjugator(const Subgroup& g, const Subgroup& h1, const Subgroup& h2) {
  require_contained(g, h1);
  require_contained(g, h2);
  if (h1.order() != h2.order()) return std::nullopt;
  if (order_profile(h1) != order_profile(h2)) return std::nullopt;
  const auto& hol = g.holomorph();
  for (ElemId x : g.ids()) {
    bool ok = true;
    for (ElemId y : h1.generators()) {
      if (!h2.contains(hol.conj(x, y))) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

bool are_conjugate(const Subgroup& g, const Subgroup& h1, const Subgroup& h2) {
  return find_conjugator(g, h1, h2).has_value();
}

Subgroup centralizer(const Subgroup& g, ElemId x) {
  const auto& hol = g.holomorph();
  Mask m(hol.order());
  for (ElemId y : g.ids()) {
    if (hol.mul(x, y) == hol.mul(y, x)) m.set(y);
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

Subgroup center(const Subgroup& g) {
  const auto& hol = g.holomorph();
  Mask m(hol.order());
  for (ElemId y : g.ids()) {
    bool central = true;
    for (ElemId x : g.generators()) {
      if (hol.mul(x, y) != hol.mul(y, x)) {
        central = false;
        break;
      }
    }
    if (central) m.set(y);
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

Subgroup derived_subgroup(const Subgroup& g) {
  const auto& hol = g.holomorph();
  Mask comms(hol.order());
  for (ElemId x : g.ids()) {
    for (ElemId y : g.ids()) {
      comms.set(hol.mul(hol.mul(hol.mul(y, x), hol.inv(y)), hol.inv(x)));
    }
  }
  std::vector<ElemId> gens;
  for (auto x = comms.find_first(); x != Mask::npos; x = comms.find_next(x)) {
    gens.push_back(static_cast<ElemId>(x));
  }
  return closure(g.holomorph_ptr(), gens);
}

Subgroup hall_p_part(const Subgroup& g) {
  const auto& hol = g.holomorph();
  const Residue p = hol.context().p();
  Mask m(hol.order());
  for (ElemId x : g.ids()) {
    if (hol.element(x).a % p == 1 || p == 2) m.set(x);
  }
  return Subgroup(g.holomorph_ptr(), std::move(m));
}

std::vector<std::uint32_t> order_profile(const Subgroup& g) {
  std::vector<std::uint32_t> out;
  out.reserve(g.order());
  for (ElemId x : g.ids()) out.push_back(g.holomorph().element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool has_element_of_order(const Subgroup& g, std::uint64_t order) {
  return std::any_of(g.ids().begin(), g.ids().end(),
                     [&](ElemId x) { return g.holomorph().element_order(x) == order; });
}

// --- enumeration -----------------------------------------------------------

std::vector<Subgroup> all_subgroups(const HolPtr& hol, std::size_t max_order) {
  if (hol->order() > max_order) throw CapacityError(hol->order(), max_order);
  const std::size_t m = hol->order();
  const auto p = static_cast<std::uint32_t>(hol->context().p());

  std::vector<Subgroup> found;
  std::unordered_map<std::vector<ElemId>, std::size_t, IdsHash> seen;
  auto insert = [&](Subgroup s) {
    std::vector<ElemId> key(s.ids().begin(), s.ids().end());
    if (seen.emplace(std::move(key), found.size()).second) found.push_back(std::move(s));
  };

  for (ElemId x = 0; x < m; ++x) {
    const ElemId gen[] = {x};
    insert(closure(hol, gen));
  }

  // Saturate: extend each subgroup by one outside element. <S, g> only
  // depends on the double coset SgS. In a p-group every subgroup is reached
  // from a maximal subgroup, which is normal of index p, so only elements
  // normalizing S with g^p in S need trying.
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Subgroup s = found[i];
    Mask covered = s.mask();
    for (ElemId g = 0; g < m; ++g) {
      if (covered.test(g)) continue;
      if (hol->is_p_group()) {
        bool normalizes = true;
        for (ElemId y : s.generators()) {
          if (!s.contains(hol->conj(g, y))) {
            normalizes = false;
            break;
          }
        }
        ElemId gp = Holomorph::identity();
        for (std::uint32_t k = 0; k < p; ++k) gp = hol->mul(gp, g);
        if (!normalizes || !s.contains(gp)) continue;
        for (ElemId y : s.ids()) covered.set(hol->mul(g, y));
      } else {
        for (ElemId y : s.ids()) {
          const ElemId yg = hol->mul(y, g);
          for (ElemId z : s.ids()) covered.set(hol->mul(yg, z));
        }
      }
      std::vector<ElemId> gens(s.generators().begin(), s.generators().end());
      gens.push_back(g);
      insert(closure(hol, gens));
    }
  }

  std::sort(found.begin(), found.end());
  return found;
}

SubgroupLattice::SubgroupLattice(HolPtr hol, std::vector<Subgroup> subgroups)
    : hol_(std::move(hol)), subgroups_(std::move(subgroups)) {
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (is_transitive(subgroups_[i])) transitive_.push_back(i);
    by_order_[subgroups_[i].order()].push_back(i);
  }
}

std::shared_ptr<const SubgroupLattice> SubgroupLattice::build(const HolPtr& hol, std::size_t max_order) {
  return std::shared_ptr<const SubgroupLattice>(new SubgroupLattice(hol, all_subgroups(hol, max_order)));
}

std::optional<std::size_t> SubgroupLattice::index_of(const Subgroup& s) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), s);
  if (it == subgroups_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<std::size_t> SubgroupLattice::subgroups_of(const Subgroup& g, std::size_t order) const {
  std::vector<std::size_t> out;
  auto it = by_order_.find(order);
  if (it == by_order_.end()) return out;
  for (std::size_t i : it->second) {
    if (subgroups_[i].is_subgroup_of(g)) out.push_back(i);
  }
  return out;
}

}  // namespace holgal
