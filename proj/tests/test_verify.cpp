#include <doctest.h>

#include <json.hpp>

#include "parabraid/verify.hpp"

using namespace parabraid;

namespace {

Ring nc() { return parse_ring("poly:a,b,c,noncomm"); }
Ring comm() { return parse_ring("poly:a,b,c"); }

const CheckResult* find(const CheckReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("verify: type A suites pass") {
  for (int n : {3, 4, 5}) {
    RootSystem rs(Family::A, n);
    for (const char* s : {"phi", "pure-braid", "psi", "kassel-reutenauer"}) {
      CAPTURE(n);
      CAPTURE(s);
      CheckReport r = run_suite(s, rs, nc());
      CHECK(r.ok());
      CHECK(r.count(CheckStatus::Unproven) == 0);
      CHECK(r.count(CheckStatus::Pass) > 0);
    }
  }
}

TEST_CASE("verify: type D suites") {
  RootSystem d4(Family::D, 4);
  for (const char* s : {"phi", "pure-braid", "psi", "twin-twine"}) {
    CAPTURE(s);
    CheckReport r = run_suite(s, d4, comm());
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::Unproven) == 0);
  }
  CHECK_THROWS_AS(run_suite("kassel-reutenauer", d4, comm()), VerifyError);
  CHECK_THROWS_AS(run_suite("phi", d4, nc()), VerifyError);
  CHECK_THROWS_AS(run_suite("nonsense", d4, comm()), VerifyError);
}

TEST_CASE("verify: pure braid prover checks can be skipped") {
  SuiteOptions opt;
  opt.prove = false;
  CheckReport r = check_pure_braid_lemma(RootSystem(Family::A, 4), nc(), opt);
  CHECK(r.count(CheckStatus::Skipped) == 18);
  CHECK(r.count(CheckStatus::Pass) == 18);
}

TEST_CASE("verify: calibration reports the unattainable Weyl compatibility") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    CheckReport r = check_calibration(RootSystem(Family::D, n));
    CHECK_FALSE(r.ok());
    for (const char* id : {"calibration/idempotent", "calibration/lift-involution", "calibration/lift-form",
                           "calibration/lift-braid", "calibration/st2-simple", "calibration/st2-reference",
                           "calibration/steinberg-relations"}) {
      CAPTURE(id);
      REQUIRE(find(r, id));
      CHECK(find(r, id)->status == CheckStatus::Pass);
    }
    REQUIRE(find(r, "calibration/compat"));
    CHECK(find(r, "calibration/compat")->status == CheckStatus::Fail);
    CHECK(find(r, "calibration/st2-plus-preference")->status == CheckStatus::Skipped);
  }
  CHECK(find(check_calibration(RootSystem(Family::D, 3)), "calibration/compat")->witness.rfind("26/36", 0) == 0);
  CHECK(find(check_calibration(RootSystem(Family::D, 4)), "calibration/compat")->witness.rfind("82/96", 0) == 0);
}

TEST_CASE("verify: reports are deterministic apart from timing") {
  RootSystem a3(Family::A, 4);
  CheckReport r1 = check_psi_independence(a3, nc()), r2 = check_psi_independence(a3, nc());
  CHECK(r1.to_json(false) == r2.to_json(false));
  auto j = nlohmann::json::parse(r1.to_json());
  CHECK(j["suite"] == "psi");
  CHECK(j["family"] == "A");
  CHECK(j["rank"] == 3);
  CHECK(j.contains("elapsed_ms"));
  CHECK_FALSE(nlohmann::json::parse(r1.to_json(false)).contains("elapsed_ms"));
  CHECK(std::is_sorted(r1.checks.begin(), r1.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
  CHECK(r1.to_text().rfind("psi A3 over poly:a,b,c,noncomm:", 0) == 0);
}

TEST_CASE("verify: every coverage item is exercised by its suite") {
  for (const auto& item : coverage_manifest()) {
    CAPTURE(item.item);
    bool is_d = item.suite == "twin-twine" || item.suite == "calibration";
    RootSystem rs = is_d ? RootSystem(Family::D, 4) : RootSystem(Family::A, 4);
    CheckReport r = item.suite == "certificates" ? check_certificates()
                    : item.suite == "calibration" ? check_calibration(rs)
                                                  : run_suite(item.suite, rs, is_d ? comm() : nc());
    bool hit = false;
    for (const auto& c : r.checks) hit = hit || c.id.rfind(item.check_prefix, 0) == 0;
    CHECK(hit);
  }
}

TEST_CASE("verify: twin and twine words") {
  for (int n : {4, 5}) {
    RootSystem rs(Family::D, n);
    auto [l, r] = twine_words(rs);
    CHECK(braid_equal(rs, l, r));
    auto [tl, tr] = twin_words(rs, comm());
    CHECK(sd_equal(rs, comm(), phi(rs, tl), phi(rs, tr)));
  }
  CHECK_THROWS(check_twin_twine(RootSystem(Family::D, 6), comm()));
}

TEST_CASE("verify: file stems") {
  CHECK(file_stem("A2(1,2p)^-1") == "A2_1_2p__-1");
  CHECK(file_stem("twin/D4") == "twin_D4");
  CHECK(system_tag(RootSystem(Family::A, 4)) == "A3");
  CHECK(system_tag(RootSystem(Family::D, 4)) == "D4");
}
