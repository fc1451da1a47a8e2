#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holgal/cli/commands.hpp"
#include "holgal/cli/properties.hpp"
#include "holgal/cli/records.hpp"
#include "holgal/cli/sweep.hpp"
#include "test_support.hpp"

using namespace holgal;
using namespace holgal::cli;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t summary_value(const std::string& summary, const std::string& key) {
  for (const auto& line : lines_of(summary)) {
    if (line.rfind(key + ": ", 0) == 0) return std::stoul(line.substr(key.size() + 2));
  }
  return static_cast<std::size_t>(-1);
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "holgal_test_commands";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify 2 2") {
    std::ostringstream out, err;
    CHECK(run_classify({.p = 2, .e = 2}, out, err) == kExitOk);
    const auto records = lines_of(out.str());
    CHECK(records.size() == 7);
    CHECK(summary_value(err.str(), "transitive") == 3);
    CHECK(summary_value(err.str(), "pairs") == 7);
    CHECK(summary_value(err.str(), "disagreements") == 0);

    const auto lattice = SubgroupLattice::build(test::hol(2, 2));
    const HolPtr& h = lattice->holomorph_ptr();
    const std::size_t gi = *lattice->index_of(whole_group(h));
    const std::size_t hi = *lattice->index_of(test::gen(h, {{2, 1}}));
    bool found = false;
    for (const auto& line : records) {
      const auto j = nlohmann::json::parse(line);
      CHECK(j["schema"] == "v1");
      CHECK(j["agree"] == true);
      if (j["g_index"] == gi && j["h_index"] == hi) found = j["case"] == "ADMITS";
    }
    CHECK(found);
  }

  TEST_CASE("record columns") {
    const auto first = nlohmann::ordered_json::parse(to_json_line(Verdict{}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : first.items()) keys.push_back(k);
    const std::vector<std::string> expected{"schema", "p", "e", "g_index", "h_index", "g_order", "h_order",
                                            "h_cap_n", "g_cap_n", "s", "has_full_order_elem", "h_normal",
                                            "h_conj_stab", "case", "oracle", "criteria", "agree"};
    CHECK(keys == expected);
    std::string header;
    for (const auto& k : expected) header += (header.empty() ? "" : ",") + k;
    CHECK(csv_header() == header);
    CHECK(first["oracle"].is_null());
  }

  TEST_CASE("classify 3 2 rejects only non-conjugate H") {
    std::ostringstream out, err;
    CHECK(run_classify({.p = 3, .e = 2}, out, err) == kExitOk);
    for (const auto& line : lines_of(out.str())) {
      const auto j = nlohmann::json::parse(line);
      if (j["case"] != "ADMITS") {
        CHECK(j["h_conj_stab"] == false);
        CHECK(j["case"] == "ODD_NOT_CONJUGATE");
      }
    }
    CHECK(summary_value(err.str(), "ODD_NOT_CONJUGATE") == 4);
  }

  TEST_CASE("criteria-only") {
    std::ostringstream out, err;
    CHECK(run_classify({.p = 2, .e = 3, .criteria_only = true}, out, err) == kExitOk);
    for (const auto& line : lines_of(out.str())) {
      const auto j = nlohmann::json::parse(line);
      CHECK(j["oracle"].is_null());
      CHECK(j["agree"].is_null());
    }
  }

  TEST_CASE("out file, csv and manifest") {
    const fs::path path = scratch_dir() / "c23.csv";
    std::ostringstream out, err;
    CHECK(run_classify({.p = 2, .e = 3, .out_path = path.string(), .format = Format::Csv}, out, err) == kExitOk);
    const auto rows = lines_of(slurp(path));
    REQUIRE(!rows.empty());
    CHECK(rows[0] == csv_header());
    CHECK(rows.size() - 1 == summary_value(out.str(), "pairs"));
    CHECK(err.str().empty());

    const auto manifest = nlohmann::json::parse(slurp(path.string() + ".manifest.json"));
    CHECK(manifest["hol_order"] == 32);
    CHECK(manifest["subgroups"].size() == 58);
    CHECK(manifest["subgroups"][0]["elements"][0] == "[0, 1]");
  }

  TEST_CASE("exit codes") {
    std::ostringstream out, err;
    CHECK(run_classify({.p = 2, .e = 6}, out, err) == kExitUsage);
    CHECK(err.str().find("512") != std::string::npos);
    CHECK(run_classify({.p = 4, .e = 2}, out, err) == kExitUsage);
    CHECK(run_classify({.p = 2, .e = 2, .out_path = "/nonexistent-dir/x.jsonl"}, out, err) == kExitIo);
    CHECK(run_classify({.p = 37, .e = 1}, out, err) == kExitUsage);
    CHECK(run_classify({.p = 37, .e = 1, .max_order = 2000}, out, err) == kExitOk);
  }

  TEST_CASE("classification is deterministic under threads") {
    std::ostringstream a, b, c, err;
    run_classify({.p = 2, .e = 3}, a, err);
    run_classify({.p = 2, .e = 3, .jobs = 8}, b, err);
    run_classify({.p = 2, .e = 3, .jobs = 8}, c, err);
    CHECK(a.str() == b.str());
    CHECK(b.str() == c.str());
  }

  TEST_CASE("verify reports") {
    std::ostringstream out, err;
    CHECK(run_verify({.p = 2, .e = 3}, out, err) == kExitOk);
    CHECK(out.str().find("center–commutator identity: PASS over all non-regular transitive G") != std::string::npos);

    std::ostringstream out2;
    CHECK(run_verify({.p = 2, .e = 2}, out2, err) == kExitOk);
    CHECK(out2.str().find("regular iso-classes: {cyclic, elementary-abelian}: FLAG") != std::string::npos);

    std::ostringstream out3;
    CHECK(run_verify({.p = 3, .e = 2}, out3, err) == kExitOk);
    CHECK(out3.str().find("Hall transfer: PASS") != std::string::npos);
    CHECK(out3.str().find("FAIL") == std::string::npos);
  }

  TEST_CASE("probe") {
    std::ostringstream out, err;
    CHECK(run_probe({.p = 2, .e = 2, .g_spec = "[1,1];[0,3]", .h_spec = "[1,3]"}, out, err) == kExitOk);
    CHECK(out.str().find("case: ADMITS") != std::string::npos);
    CHECK(out.str().find("witness T") != std::string::npos);

    // G = <sigma, phi_3> has s = 1 and contains sigma of order 8, and H = <sigma^4> is central.
    std::ostringstream out2;
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[1,1];[0,3]", .h_spec = "[4,1]"}, out2, err) == kExitOk);
    CHECK(out2.str().find("case: ADMITS") != std::string::npos);

    std::ostringstream out3;
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[0,1];[2,1];[0,3]", .h_spec = "[4,1]"}, out3, err) == kExitUsage);
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[1,1]", .h_spec = "[0,3]"}, out3, err) == kExitUsage);
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[1,1];[0,3]", .h_spec = "[2,1]"}, out3, err) == kExitUsage);
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[1,1", .h_spec = "[2,1]"}, out3, err) == kExitUsage);

    std::ostringstream out4;
    CHECK(run_probe({.p = 2, .e = 3, .g_spec = "[1,1];[0,3];[0,5]", .h_spec = "[2,1]"}, out4, err) == kExitOk);
    CHECK(out4.str().find("case: CASE_I") != std::string::npos);
    CHECK(out4.str().find("oracle reason:") != std::string::npos);
  }

  TEST_CASE("pair enumeration order") {
    const auto lattice = SubgroupLattice::build(test::hol(2, 3));
    const auto pairs = classification_pairs(*lattice);
    CHECK(pairs.size() == 63);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  }

  TEST_CASE("brute-force isomorphism helper") {
    const HolPtr h = test::hol(2, 2);
    const Subgroup all = whole_group(h);
    const AbstractGroup d4 = abstract_with_stabilizer(all);
    CHECK(brute_force_isomorphic(d4, d4));
    CHECK(brute_force_isomorphic(quotient(all, trivial_subgroup(h), test::gen(h, {{1, 3}})), d4));
    CHECK_FALSE(brute_force_isomorphic(quotient(all, trivial_subgroup(h), test::gen(h, {{2, 1}})), d4));
  }
}
