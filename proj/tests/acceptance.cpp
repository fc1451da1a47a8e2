#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "holgal/cli/commands.hpp"
#include "holgal/cli/properties.hpp"
#include "holgal/cli/sweep.hpp"
#include "holgal/criteria.hpp"

using namespace holgal;
using namespace holgal::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

LatticePtr lattice_for(Residue p, int e) {
  const std::size_t bound = 4096;
  return SubgroupLattice::build(Holomorph::create(GroupContext(p, e), bound), bound);
}

HolElement naive_mul(const HolElement& g, const HolElement& h, Residue n) {
  return {(g.u + h.u * g.a) % n, (g.a * h.a) % n};
}

std::uint32_t naive_vp(BigInt m, Residue p) {
  std::uint32_t v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

Outcome formula_equivalence() {
  Outcome out;
  std::size_t checks = 0;
  for (auto [p, e] : {std::pair<Residue, int>{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {2, 5}}) {
    const GroupContext ctx(p, e);
    const Residue n = ctx.n();
    const std::uint64_t k_max = 2 * static_cast<std::uint64_t>(n);
    const auto fail = [&](const std::string& what) {
      if (out.pass) out.detail = "p^e = " + std::to_string(n) + ": " + what;
      out.pass = false;
    };
    for (Residue a : ctx.units()) {
      BigInt exact = 0;
      BigInt term = 1;
      for (std::uint64_t k = 0; k <= k_max; ++k, ++checks) {
        if (s_sum(a, k, ctx) != static_cast<Residue>(exact % n)) fail("S(" + std::to_string(a) + ", k) mod n");
        if (a % p == 1) {
          const Valuation closed = s_valuation(a, k, p);
          const bool ok = k == 0 ? closed.is_infinite() : closed == Valuation(naive_vp(exact, p));
          if (!ok) fail("v_p(S(" + std::to_string(a) + ", " + std::to_string(k) + "))");
        }
        exact += term;
        term *= a;
      }
    }
    for (Residue u = 0; u < n; ++u) {
      for (Residue a : ctx.units()) {
        const HolElement g{u, a};
        HolElement x = kIdentity;
        std::uint64_t order = 0;
        for (std::uint64_t k = 0; k <= k_max || order == 0; ++k) {
          if (k <= k_max && !(pow(g, k, ctx) == x)) fail("power of " + to_string(g));
          if (k > 0 && order == 0 && x == kIdentity) order = k;
          x = naive_mul(x, g, n);
          ++checks;
        }
        if (element_order(g, ctx) != order) fail("order of " + to_string(g));
      }
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks over p^e in {4, 8, 9, 16, 27, 32}";
  return out;
}

Outcome equivalence(Residue p, const std::vector<int>& exponents) {
  Outcome out;
  std::string counts;
  for (int e : exponents) {
    const auto lattice = lattice_for(p, e);
    const Oracle oracle(lattice);
    const auto reports = classify_all(*lattice, &oracle, std::thread::hardware_concurrency());
    std::size_t bad = 0;
    for (const auto& r : reports) bad += r.verdict.agree.value_or(false) ? 0 : 1;
    if (bad > 0) out.pass = false;
    const Residue n = lattice->context().n();
    counts += (counts.empty() ? "" : ", ") + std::string("p^e = ") + std::to_string(n) + ": " +
              std::to_string(reports.size()) + " pairs, " + std::to_string(bad) + " disagreements";
  }
  out.detail = counts;
  return out;
}

Outcome dichotomy() {
  Outcome out;
  std::size_t all_admit = 0;
  std::size_t witnessed = 0;
  for (int e = 2; e <= 4; ++e) {
    const auto lattice = lattice_for(2, e);
    const Oracle oracle(lattice);
    const auto reports = classify_all(*lattice, &oracle, 1);
    std::map<std::size_t, std::vector<const PairReport*>> by_g;
    for (const auto& r : reports) by_g[r.verdict.g_index].push_back(&r);
    for (std::size_t gi : lattice->transitive()) {
      const Subgroup& g = (*lattice)[gi];
      const Dichotomy d = dichotomy_case(g);
      if (d.kind == DichotomyKind::AllAdmit) {
        ++all_admit;
        for (const PairReport* r : by_g[gi]) {
          if (!r->verdict.oracle.value_or(false) || !r->verdict.criteria) out.pass = false;
        }
      } else if (d.kind == DichotomyKind::WitnessFails) {
        ++witnessed;
        const auto wi = lattice->index_of(*d.witness);
        bool seen = false;
        for (const PairReport* r : by_g[gi]) {
          if (wi && r->verdict.h_index == *wi) {
            seen = true;
            if (r->verdict.oracle.value_or(true) || r->verdict.criteria) out.pass = false;
          }
        }
        if (!seen || !is_normal(g, *d.witness)) out.pass = false;
      }
    }
  }
  out.detail = std::to_string(all_admit) + " all-admit groups, " + std::to_string(witnessed) +
               " groups with a failing witness, e <= 4";
  return out;
}

Outcome from_properties(const std::function<std::vector<PropertyResult>()>& run, const std::string& scope) {
  Outcome out;
  std::size_t count = 0;
  for (const auto& r : run()) {
    ++count;
    if (r.status == Status::Fail) {
      out.pass = false;
      out.detail = format_result(r);
      return out;
    }
  }
  out.detail = std::to_string(count) + " properties " + scope;
  return out;
}

Outcome structural() {
  Outcome out;
  std::size_t count = 0;
  for (int e = 2; e <= 4; ++e) {
    for (const auto& r : structural_properties(*lattice_for(2, e))) {
      ++count;
      if (r.status == Status::Fail) {
        out.pass = false;
        out.detail = "e = " + std::to_string(e) + ": " + format_result(r);
        return out;
      }
    }
  }
  out.detail = std::to_string(count) + " property checks over e <= 4";
  return out;
}

Outcome rump() {
  Outcome out;
  std::string detail;
  for (int e = 2; e <= 4; ++e) {
    const auto r = rump_properties(Oracle(lattice_for(2, e))).front();
    const bool ok = e == 2 ? r.status == Status::Flag : r.status == Status::Pass;
    if (!ok) out.pass = false;
    detail += (detail.empty() ? "" : "; ") + std::string("e = ") + std::to_string(e) + " " + format_result(r);
  }
  out.detail = detail;
  return out;
}

Outcome determinism() {
  Outcome out;
  const auto run = [](unsigned jobs) {
    std::ostringstream records, summary;
    ClassifyOptions options;
    options.p = 2;
    options.e = 3;
    options.jobs = jobs;
    run_classify(options, records, summary);
    return records.str() + summary.str();
  };
  const std::string first = run(1);
  const bool same = first == run(1) && first == run(8) && first == run(8);

  const auto dir = std::filesystem::temp_directory_path() / "holgal_acceptance";
  std::filesystem::create_directories(dir);
  std::string files[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream summary, err;
    ClassifyOptions options;
    options.p = 2;
    options.e = 3;
    options.jobs = i == 0 ? 1 : 8;
    options.out_path = (dir / ("run" + std::to_string(i) + ".jsonl")).string();
    run_classify(options, summary, err);
    std::ifstream in(*options.out_path, std::ios::binary);
    std::ifstream manifest(*options.out_path + ".manifest.json", std::ios::binary);
    files[i] = std::string(std::istreambuf_iterator<char>(in), {}) + summary.str() +
               std::string(std::istreambuf_iterator<char>(manifest), {});
  }
  out.pass = same && files[0] == files[1] && !first.empty();
  out.detail = out.pass ? "classify 2 3 byte-identical across runs and --jobs 1/8 (stdout, file and manifest)"
                        : "outputs differ";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const bool stretch = argc > 1 && std::strcmp(argv[1], "--stretch") == 0;

  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria;
  if (stretch) {
    criteria = {
        {2, "even-p equivalence, e = 5", [] { return equivalence(2, {5}); }},
        {3, "odd-p equivalence, p^e = 25", [] { return equivalence(5, {2}); }},
    };
  } else {
    criteria = {
        {1, "power/order/valuation formulas", formula_equivalence},
        {2, "even-p equivalence", [] { return equivalence(2, {2, 3, 4}); }},
        {3, "odd-p equivalence", [] { return equivalence(3, {2}); }},
        {4, "dichotomy", dichotomy},
        {5, "structural lemmas", structural},
        {6, "Hall-part suite",
         [] { return from_properties([] { return hall_properties(*lattice_for(3, 2)); }, "at p^e = 9"); }},
        {7, "regular subgroup classes", rump},
        {8, "determinism", determinism},
    };
  }

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (o.pass ? "PASS" : "FAIL") << " " << o.detail
              << " [" << std::fixed << std::setprecision(2) << seconds << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
