#include <doctest.h>

#include <json.hpp>
#include <set>

#include "padapt/certificate.hpp"

using namespace padapt;

TEST_CASE("certificate pipeline for the worked B6 case") {
  Certificate cert = build_certificate(make_raw(Family::B, 6, {2, 4}));
  CHECK(cert.has_recipe);
  CHECK(cert.candidate_ok());
  CHECK(cert.verdict.exists);
  CHECK(cert.verdict.route == Route::B);
  CHECK(cert.index_agree);
  CHECK(cert.magic == 26);
  REQUIRE(cert.degree_sum.has_value());
  CHECK(cert.degree_sum->equal);
  CHECK(cert.passed());

  // Byte-identical serialization on repeated runs.
  Certificate again = build_certificate(make_raw(Family::B, 6, {2, 4}));
  CHECK(to_json(cert) == to_json(again));
  CHECK(to_json(cert).find("\"route\": \"B\"") != std::string::npos);

  // Valid JSON with the fixed top-level schema; parse -> dump is stable.
  auto parsed = nlohmann::ordered_json::parse(to_json(cert));
  std::vector<std::string> keys;
  for (const auto& [k, v] : parsed.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"case", "sets", "h", "conditions",
                                         "regularity", "index", "bounds", "verdict",
                                         "table", "degree_sum", "spectrum"});
  CHECK(parsed.dump(2) + "\n" == to_json(cert));
  CHECK(parsed["h"]["coroot_coeffs"][3]["coeff"] == "1/2");
  CHECK(parsed["index"]["oracle"]["seeds"] == std::vector<int>{1, 2, 3});
}

TEST_CASE("certificate for a raw case without a recipe") {
  Certificate cert = build_certificate(make_raw(Family::B, 6, {1, 4}));
  CHECK(!cert.has_recipe);
  CHECK(!cert.verdict.exists);
  CHECK(cert.index_agree);
  CHECK(cert.passed());
}

TEST_CASE("certificate for the failing variant") {
  CertificateOptions opts;
  opts.variant = true;
  opts.run_oracle = false;
  Certificate cert = build_certificate(make_raw(Family::B, 8, {2, 4, 6}), opts);
  REQUIRE(cert.conds.has_value());
  CHECK(!cert.conds->v_ok);
  CHECK(cert.conds->first_failure() == "condition (v)");
  CHECK(!cert.passed());
}

TEST_CASE("grid enumeration covers the two worked deletions") {
  auto cases = enumerate_cases(9);
  bool b6 = false, d9 = false;
  for (const auto& pc : cases) {
    if (pc.family == Family::B && pc.deleted == std::set<int>{2, 4}) b6 = true;
    if (pc.family == Family::D && pc.deleted == std::set<int>{1, 3, 5, 8, 9}) d9 = true;
  }
  CHECK(b6);
  CHECK(d9);
}

TEST_CASE("grid sweep at small rank") {
  GridOptions opts;
  opts.max_n = 5;
  opts.oracle_max_n = 5;
  opts.scaling_max_n = 5;
  auto entries = run_grid(opts);
  CHECK(!entries.empty());
  for (const auto& e : entries) {
    INFO(e.pc.label() << ": " << e.failure);
    CHECK(e.ok);
  }
}
