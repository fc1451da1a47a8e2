#include "holgal/abstract_group.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "holgal/errors.hpp"

namespace holgal {

using Index = AbstractGroup::Index;

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

std::size_t isqrt_exact(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) throw ParameterError("Cayley table size is not a perfect square");
  return r;
}

// Greedy generating sequence of A: largest orders first.
std::vector<Index> generating_sequence(const AbstractGroup& a) {
  std::vector<Index> order(a.size());
  for (Index x = 0; x < a.size(); ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return a.element_order(x) > a.element_order(y); });
  std::vector<Index> gens;
  std::vector<bool> span(a.size(), false);
  span[0] = true;
  std::size_t span_size = 1;
  for (Index x : order) {
    if (span[x]) continue;
    gens.push_back(x);
    std::vector<Index> queue{0};
    std::fill(span.begin(), span.end(), false);
    span[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Index g : gens) {
        const Index y = a.mul(queue[i], g);
        if (!span[y]) {
          span[y] = true;
          queue.push_back(y);
        }
      }
    }
    span_size = queue.size();
    if (span_size == a.size()) break;
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const AbstractGroup& a, const AbstractGroup& b)
      : a_(a), b_(b), gens_(generating_sequence(a)), keys_a_(a.size()), keys_b_(b.size()) {
    for (Index x = 0; x < a.size(); ++x) keys_a_[x] = element_key(a, x);
    for (Index x = 0; x < b.size(); ++x) keys_b_[x] = element_key(b, x);
  }

  std::optional<std::vector<Index>> run() {
    std::vector<Index> img(a_.size(), kUnset);
    std::vector<bool> used(b_.size(), false);
    img[0] = 0;
    used[0] = true;
    if (gens_.empty()) return img;  // trivial group
    if (search(0, img, used)) return result_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t level, const std::vector<Index>& img, const std::vector<bool>& used) {
    const Index g = gens_[level];
    for (Index c = 0; c < b_.size(); ++c) {
      if (used[c] || keys_b_[c] != keys_a_[g]) continue;
      std::vector<Index> next_img = img;
      std::vector<bool> next_used = used;
      next_img[g] = c;
      next_used[c] = true;
      if (!extend(level, next_img, next_used)) continue;
      if (level + 1 == gens_.size()) {
        result_ = std::move(next_img);
        return true;
      }
      if (search(level + 1, next_img, next_used)) return true;
    }
    return false;
  }

  // Propagates f(xg) = f(x)f(g) over <gens[0..level]>; false on conflict.
  bool extend(std::size_t level, std::vector<Index>& img, std::vector<bool>& used) {
    std::vector<bool> in_domain(a_.size(), false);
    std::vector<Index> queue{0};
    in_domain[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Index x = queue[i];
      for (std::size_t j = 0; j <= level; ++j) {
        const Index g = gens_[j];
        const Index y = a_.mul(x, g);
        const Index z = b_.mul(img[x], img[g]);
        if (img[y] == kUnset) {
          if (used[z] || keys_a_[y] != keys_b_[z]) return false;
          img[y] = z;
          used[z] = true;
        } else if (img[y] != z) {
          return false;
        }
        if (!in_domain[y]) {
          in_domain[y] = true;
          queue.push_back(y);
        }
      }
    }
    return true;
  }

  const AbstractGroup& a_;
  const AbstractGroup& b_;
  std::vector<Index> gens_;
  std::vector<ElementKey> keys_a_;
  std::vector<ElementKey> keys_b_;
  std::vector<Index> result_;
};

}  // namespace

AbstractGroup::AbstractGroup(std::vector<Index> table, std::vector<bool> marked)
    : table_(std::move(table)), marked_(std::move(marked)) {
  const std::size_t m = isqrt_exact(table_.size());
  size_ = m;
  if (m == 0) throw ParameterError("empty Cayley table");
  if (marked_.size() != m) throw ParameterError("marked set has the wrong length");
  for (Index x = 0; x < m; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw ParameterError("index 0 is not the identity");
  }
  inverse_.assign(m, kUnset);
  for (Index x = 0; x < m; ++x) {
    std::vector<bool> row(m, false);
    for (Index y = 0; y < m; ++y) {
      const Index z = table_[static_cast<std::size_t>(x) * m + y];
      if (z >= m || row[z]) throw ParameterError("Cayley table is not a Latin square");
      row[z] = true;
      if (z == 0) inverse_[x] = y;
    }
  }
  if (!marked_[0]) throw ParameterError("marked set must contain the identity");
  for (Index x = 0; x < m; ++x) {
    if (!marked_[x]) continue;
    ++marked_count_;
    for (Index y = 0; y < m; ++y) {
      if (marked_[y] && !marked_[mul(x, y)]) throw ParameterError("marked set is not closed");
    }
  }
  orders_.assign(m, 0);
  for (Index x = 0; x < m; ++x) {
    std::uint32_t t = 1;
    for (Index y = x; y != 0; y = mul(y, x)) {
      if (++t > m) throw ParameterError("element without finite order; table is not a group law");
    }
    orders_[x] = t;
  }
  central_.assign(m, true);
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      if (mul(x, y) != mul(y, x)) {
        central_[x] = false;
        break;
      }
    }
  }
}

bool AbstractGroup::has_element_of_order(std::uint64_t order) const {
  return std::any_of(orders_.begin(), orders_.end(), [&](std::uint32_t t) { return t == order; });
}

bool AbstractGroup::check_group_law(std::size_t samples) const {
  const auto m = static_cast<Index>(size());
  auto assoc = [&](Index x, Index y, Index z) { return mul(mul(x, y), z) == mul(x, mul(y, z)); };
  if (m <= 64) {
    for (Index x = 0; x < m; ++x)
      for (Index y = 0; y < m; ++y)
        for (Index z = 0; z < m; ++z)
          if (!assoc(x, y, z)) return false;
    return true;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<Index> pick(0, m - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    if (!assoc(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

AbstractGroup AbstractGroup::with_marked(std::vector<bool> marked) const {
  return AbstractGroup(table_, std::move(marked));
}

ElementKey element_key(const AbstractGroup& g, Index x) {
  return {g.element_order(x), g.is_central(x), g.is_marked(x)};
}

std::vector<ElementKey> signature(const AbstractGroup& g) {
  std::vector<ElementKey> out;
  out.reserve(g.size());
  for (Index x = 0; x < g.size(); ++x) out.push_back(element_key(g, x));
  std::sort(out.begin(), out.end());
  return out;
}

AbstractGroup quotient(const Subgroup& g, const Subgroup& c, const Subgroup& h) {
  if (!c.is_subgroup_of(g) || !h.is_subgroup_of(g)) {
    throw ParameterError("quotient needs C and H inside G");
  }
  const auto& hol = g.holomorph();
  const std::vector<ElemId> reps = coset_representatives(g, c);
  std::vector<Index> coset_of(hol.order(), kUnset);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (ElemId y : c.ids()) coset_of[hol.mul(reps[k], y)] = static_cast<Index>(k);
  }
  const std::size_t m = reps.size();
  std::vector<Index> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = coset_of[hol.mul(reps[i], reps[j])];
  }
  std::vector<bool> marked(m, false);
  for (ElemId y : h.ids()) marked[coset_of[y]] = true;
  return AbstractGroup(std::move(table), std::move(marked));
}

std::vector<ElemId> coset_representatives(const Subgroup& g, const Subgroup& c) {
  if (!c.is_subgroup_of(g)) throw ParameterError("C is not contained in G");
  if (!is_normal(g, c)) throw ParameterError("quotient by a subgroup that is not normal");
  const auto& hol = g.holomorph();
  std::vector<bool> covered(hol.order(), false);
  std::vector<ElemId> reps;
  for (ElemId x : g.ids()) {
    if (covered[x]) continue;
    for (ElemId y : c.ids()) covered[hol.mul(x, y)] = true;
    reps.push_back(x);
  }
  return reps;
}

AbstractGroup quotient(const Subgroup& g, const Subgroup& c) { return quotient(g, c, c); }

AbstractGroup abstract_with_stabilizer(const Subgroup& t) {
  return quotient(t, trivial_subgroup(t.holomorph_ptr()), stabilizer(t));
}

std::optional<std::vector<Index>> find_isomorphism(const AbstractGroup& a, const AbstractGroup& b) {
  if (a.size() != b.size() || a.marked_count() != b.marked_count()) return std::nullopt;
  if (signature(a) != signature(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

bool is_isomorphism(const AbstractGroup& a, const AbstractGroup& b, const std::vector<Index>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Index x = 0; x < a.size(); ++x) {
    if (f[x] >= b.size() || hit[f[x]]) return false;
    hit[f[x]] = true;
    if (a.is_marked(x) != b.is_marked(f[x])) return false;
  }
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = 0; y < a.size(); ++y) {
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
    }
  }
  return true;
}

}  // namespace holgal
