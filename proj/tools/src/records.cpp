#include "holgal/cli/records.hpp"

#include <json.hpp>

namespace holgal::cli {

namespace {

using nlohmann::ordered_json;

ordered_json record(const Verdict& v) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["p"] = v.p;
  j["e"] = v.e;
  j["g_index"] = v.g_index;
  j["h_index"] = v.h_index;
  j["g_order"] = v.g_order;
  j["h_order"] = v.h_order;
  j["h_cap_n"] = v.h_cap_n;
  j["g_cap_n"] = v.g_cap_n;
  j["s"] = v.s;
  j["has_full_order_elem"] = v.has_full_order_elem;
  j["h_normal"] = v.h_normal;
  j["h_conj_stab"] = v.h_conj_stab;
  j["case"] = std::string(to_string(v.label));
  j["oracle"] = v.oracle ? ordered_json(*v.oracle) : ordered_json(nullptr);
  j["criteria"] = v.criteria;
  j["agree"] = v.agree ? ordered_json(*v.agree) : ordered_json(nullptr);
  return j;
}

std::string csv_cell(const ordered_json& value) {
  if (value.is_null()) return "";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

}  // namespace

std::string to_json_line(const Verdict& v) { return record(v).dump(); }

std::string csv_header() {
  const ordered_json columns = record(Verdict{});
  std::string line;
  for (const auto& [key, value] : columns.items()) {
    if (!line.empty()) line += ',';
    line += key;
  }
  return line;
}

std::string to_csv_line(const Verdict& v) {
  const ordered_json row = record(v);
  std::string line;
  bool first = true;
  for (const auto& [key, value] : row.items()) {
    if (!first) line += ',';
    first = false;
    line += csv_cell(value);
  }
  return line;
}

std::string manifest_json(const SubgroupLattice& lattice) {
  const auto& ctx = lattice.context();
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["p"] = ctx.p();
  j["e"] = ctx.e();
  j["n"] = ctx.n();
  j["hol_order"] = lattice.holomorph().order();
  ordered_json subs = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Subgroup& s = lattice[i];
    ordered_json entry;
    entry["index"] = i;
    entry["order"] = s.order();
    entry["transitive"] = is_transitive(s);
    entry["regular"] = is_regular(s);
    ordered_json gens = ordered_json::array();
    for (ElemId x : s.generators()) gens.push_back(to_string(lattice.holomorph().element(x)));
    entry["generators"] = std::move(gens);
    ordered_json elems = ordered_json::array();
    for (const auto& g : s.elements()) elems.push_back(to_string(g));
    entry["elements"] = std::move(elems);
    subs.push_back(std::move(entry));
  }
  j["subgroups"] = std::move(subs);
  return j.dump(1) + "\n";
}

}  // namespace holgal::cli
