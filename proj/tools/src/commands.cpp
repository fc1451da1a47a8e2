#include "holgal/cli/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "holgal/cli/properties.hpp"
#include "holgal/cli/records.hpp"
#include "holgal/cli/sweep.hpp"
#include "holgal/errors.hpp"

namespace holgal::cli {

namespace {

constexpr CaseLabel kAllLabels[] = {CaseLabel::Admits, CaseLabel::CaseI,   CaseLabel::CaseII,
                                    CaseLabel::CaseIII, CaseLabel::CaseIV, CaseLabel::OddNotConjugate};

LatticePtr build_lattice(Residue p, int e, std::optional<std::size_t> max_order) {
  const std::size_t bound = resolve_max_order(max_order);
  const GroupContext ctx(p, e);
  return SubgroupLattice::build(Holomorph::create(ctx, bound), bound);
}

void write_summary(std::ostream& os, const SubgroupLattice& lattice, const std::vector<PairReport>& reports,
                   bool criteria_only) {
  std::map<CaseLabel, std::size_t> tally;
  std::size_t admits = 0;
  std::size_t disagreements = 0;
  for (const auto& r : reports) {
    ++tally[r.verdict.label];
    if (r.verdict.criteria) ++admits;
    if (r.verdict.agree && !*r.verdict.agree) ++disagreements;
  }
  const auto& ctx = lattice.context();
  os << "classify p=" << ctx.p() << " e=" << ctx.e() << "\n";
  os << "subgroups: " << lattice.size() << "\n";
  os << "transitive: " << lattice.transitive().size() << "\n";
  os << "pairs: " << reports.size() << "\n";
  os << "admits: " << admits << "\n";
  for (CaseLabel label : kAllLabels) {
    if ((ctx.p() == 2) == (label == CaseLabel::OddNotConjugate)) continue;
    os << to_string(label) << ": " << tally[label] << "\n";
  }
  if (criteria_only) {
    os << "disagreements: not checked (criteria only)\n";
  } else {
    os << "disagreements: " << disagreements << "\n";
  }
}

void write_records(std::ostream& os, const std::vector<PairReport>& reports, Format format) {
  if (format == Format::Csv) os << csv_header() << "\n";
  for (const auto& r : reports) {
    os << (format == Format::Json ? to_json_line(r.verdict) : to_csv_line(r.verdict)) << "\n";
  }
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) return false;
  file << content;
  file.flush();
  return static_cast<bool>(file);
}

std::string describe_case(CaseLabel label) {
  switch (label) {
    case CaseLabel::Admits: return "";
    case CaseLabel::CaseI: return "|H cap N| >= 4";
    case CaseLabel::CaseII: return "|H cap N| = 2 and G has no element of order n";
    case CaseLabel::CaseIII: return "|H cap N| = 2 and H is not normal in G";
    case CaseLabel::CaseIV: return "H is generated by a reflection [u, n-1] with u odd and G matches the exceptional shape";
    case CaseLabel::OddNotConjugate: return "H is not conjugate in G to the point stabilizer";
  }
  return "";
}

std::string element_list(const Subgroup& s) {
  std::string out;
  for (const auto& g : s.elements()) out += (out.empty() ? "" : "; ") + to_string(g);
  return out;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const CapacityError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int run_classify(const ClassifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LatticePtr lattice = build_lattice(options.p, options.e, options.max_order);
    std::optional<Oracle> oracle;
    if (!options.criteria_only) oracle.emplace(lattice);
    const auto reports = classify_all(*lattice, oracle ? &*oracle : nullptr, options.jobs);

    if (options.out_path) {
      std::ostringstream records;
      write_records(records, reports, options.format);
      if (!write_file(*options.out_path, records.str()) ||
          !write_file(*options.out_path + ".manifest.json", manifest_json(*lattice))) {
        err << "error: cannot write " << *options.out_path << "\n";
        return static_cast<int>(kExitIo);
      }
      write_summary(out, *lattice, reports, options.criteria_only);
    } else {
      write_records(out, reports, options.format);
      write_summary(err, *lattice, reports, options.criteria_only);
    }
    if (options.criteria_only) return static_cast<int>(kExitOk);
    for (const auto& r : reports) {
      if (!r.verdict.agree.value_or(false)) return static_cast<int>(kExitDisagreement);
    }
    return static_cast<int>(kExitOk);
  });
}

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const GroupContext ctx(options.p, options.e);
    std::vector<PropertyResult> results;
    const auto append = [&](std::vector<PropertyResult> more) {
      for (auto& r : more) {
        out << format_result(r) << "\n";
        results.push_back(std::move(r));
      }
    };
    append(residue_properties(ctx));
    append(holomorph_properties(ctx));

    const LatticePtr lattice = build_lattice(options.p, options.e, options.max_order);
    const Oracle oracle(lattice);
    const auto reports = classify_all(*lattice, &oracle, options.jobs);
    append(lattice_properties(*lattice));
    append(hall_properties(*lattice));
    append(oracle_properties(oracle, reports));
    append(criteria_properties(oracle, reports));
    append(structural_properties(*lattice));
    append(rump_properties(oracle));

    std::size_t failed = 0;
    for (const auto& r : results) failed += r.status == Status::Fail ? 1 : 0;
    out << "verify p=" << options.p << " e=" << options.e << ": " << results.size() << " properties, " << failed
        << " failed\n";
    return static_cast<int>(failed == 0 ? kExitOk : kExitDisagreement);
  });
}

int run_probe(const ProbeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LatticePtr lattice = build_lattice(options.p, options.e, options.max_order);
    const auto& ctx = lattice->context();
    const HolPtr& hol = lattice->holomorph_ptr();
    const auto parse = [&](const std::string& spec) {
      auto gens = parse_element_list(spec);
      for (const auto& g : gens) {
        if (!is_valid(g, ctx)) throw ParameterError("generator " + to_string(g) + " is not an element of Hol(N)");
      }
      return closure(hol, std::span<const HolElement>(gens));
    };
    const Subgroup g = parse(options.g_spec);
    const Subgroup h = parse(options.h_spec);
    const auto n = static_cast<std::size_t>(ctx.n());
    if (!is_transitive(g)) throw ParameterError("G = " + g.to_string() + " is not transitive");
    if (!h.is_subgroup_of(g)) throw ParameterError("H is not contained in G");
    if (g.order() != n * h.order()) {
      throw ParameterError("[G:H] = " + std::to_string(g.order() / h.order()) + " but n = " + std::to_string(n));
    }

    const Oracle oracle(lattice);
    const std::size_t gi = *lattice->index_of(g);
    const std::size_t hi = *lattice->index_of(h);
    const PairReport report = evaluate_pair(*lattice, &oracle, gi, hi);
    const Verdict& v = report.verdict;

    out << to_json_line(v) << "\n";
    out << "G #" << gi << ", order " << g.order() << ": " << element_list(g) << "\n";
    out << "H #" << hi << ", order " << h.order() << ": " << element_list(h) << "\n";
    const Subgroup c = core(g, h);
    out << "core: order " << c.order() << ": " << element_list(c) << "\n";
    out << "case: " << to_string(v.label);
    if (v.label != CaseLabel::Admits) out << " (" << describe_case(v.label) << ")";
    out << "\n";
    out << "oracle: " << (v.oracle.value_or(false) ? "admits" : "rejects") << "\n";

    const OracleAnswer& answer = *report.answer;
    if (answer.admits && answer.witness) {
      const Subgroup& t = (*lattice)[*answer.witness];
      out << "witness T #" << *answer.witness << ", order " << t.order() << ": " << element_list(t) << "\n";
      out << "isomorphism G/C -> T (coset representative -> element):\n";
      const auto reps = coset_representatives(g, c);
      const auto t_ids = t.ids();
      for (std::size_t i = 0; i < reps.size(); ++i) {
        const ElemId image = t_ids[answer.isomorphism[i]];
        out << "  " << to_string(hol->element(reps[i])) << " -> " << to_string(hol->element(image))
            << (h.contains(reps[i]) ? "  (H/C -> Stab_T)" : "") << "\n";
      }
    } else if (!answer.admits) {
      out << "oracle reason: " << answer.reason << "\n";
    }
    if (!v.agree.value_or(false)) {
      err << "criteria and oracle disagree\n";
      return static_cast<int>(kExitDisagreement);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace holgal::cli
