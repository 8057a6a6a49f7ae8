#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "cdiff/error.hpp"
#include "cdiff/verifier.hpp"

using namespace cdiff;

namespace {

FieldContext gf(std::uint32_t p, std::uint32_t n) { return FieldContext::build(FieldSpec{p, n, std::nullopt}); }

}  // namespace

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 of the published splitmix64 generator.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(rng.next() == 0x06c45d188009454fULL);
}

TEST_CASE("verify_case verdicts") {
  const auto f9 = gf(3, 2);
  auto r = verify_case(f9, 6, f9.minus_one());
  CHECK(r.verdict == Verdict::Match);
  CHECK(r.eq1_ok());
  CHECK(r.eq2_ok() == std::optional<bool>(true));
  CHECK(std::any_of(r.predictions.begin(), r.predictions.end(), [](const auto& o) {
    return o.prediction.theorem == TheoremId::P3PlusThreeHalf && o.matches;
  }));

  const auto f25 = gf(5, 2);
  r = verify_case(f25, 11, f25.minus_one());
  CHECK(r.verdict == Verdict::Match);
  CHECK(r.computed.at(0) == 8);
  CHECK(r.computed.at(1) == 9);
  CHECK(r.computed.at(2) == 8);

  const auto f7 = gf(7, 1);
  r = verify_case(f7, 2, Elem{2});
  CHECK(r.verdict == Verdict::NoPredictor);
  CHECK(r.predictions.empty());
  CHECK(r.eq1_ok());

  const auto f81 = gf(3, 4);
  r = verify_case(f81, 78, f81.minus_one());
  CHECK(r.verdict == Verdict::PredictorInconsistent);
  REQUIRE(r.predictions.size() == 1);
  CHECK(r.predictions[0].repaired_matches);
  CHECK(r.computed.at(0) == 50);
  CHECK(r.eq1_ok());

  VerifyOptions tight;
  tight.budget_q = 50;
  try {
    verify_case(f81, 78, f81.minus_one(), tight);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BudgetExceeded);
  }
  VerifyOptions no_n4;
  no_n4.n4_budget_q = 0;
  CHECK(verify_case(f9, 6, f9.minus_one(), no_n4).identities.eq2 == CheckStatus::Skipped);
  CHECK_FALSE(verify_case(f9, 6, f9.minus_one(), no_n4).eq2_ok().has_value());
}

TEST_CASE("a wrong prediction is a mismatch") {
  SpectrumPrediction wrong = predict_3n_plus3_half(2);
  std::map<unsigned, std::uint64_t> computed{{0, 4}, {1, 1}, {2, 4}};
  CHECK(same_spectrum(wrong.omega, computed));
  computed = {{0, 3}, {1, 3}, {2, 3}};
  CHECK_FALSE(same_spectrum(wrong.omega, computed));
  // Zero entries on either side are ignored.
  CHECK(same_spectrum({{0, Ratio::of(4)}, {1, Ratio::of(1)}, {2, Ratio::of(4)}, {4, Ratio::of(0)}},
                      {{0, 4}, {1, 1}, {2, 4}, {3, 0}}));
}

TEST_CASE("verdicts do not depend on the modulus") {
  for (const auto& m : irreducible_moduli(3, 4, 4)) {
    const auto f = FieldContext::build(FieldSpec{3, 4, m});
    CHECK(verify_case(f, 42, f.minus_one()).verdict == Verdict::Match);
    CHECK(verify_case(f, 78, f.minus_one()).verdict == Verdict::PredictorInconsistent);
  }
}

TEST_CASE("sweep over c") {
  const auto f16 = gf(2, 4);
  auto s = sweep_c(f16, 14);
  CHECK(s.reports.size() == 15);
  bool saw[2][2] = {{false, false}, {false, false}};
  for (const auto& r : s.reports) {
    if (r.key.c == f16.zero()) {
      CHECK(r.verdict == Verdict::NoPredictor);
      continue;
    }
    CHECK(r.verdict == Verdict::Match);
    saw[f16.trace(r.key.c)][f16.trace(f16.inv(r.key.c))] = true;
  }
  CHECK((saw[0][0] && saw[0][1] && saw[1][0] && saw[1][1]));

  const auto f5 = gf(5, 1);
  s = sweep_c(f5, 3);
  CHECK(s.reports.front().key.c == f5.zero());
  CHECK(s.reports.front().uniformity.cls == CClass::PcN);
  CHECK(s.pcn_count >= 1);

  const auto f9 = gf(3, 2);
  s = sweep_c(f9, 6);
  for (const auto& r : s.reports) {
    CAPTURE(r.key.c.v);
    if (r.key.c == f9.minus_one()) CHECK(r.verdict == Verdict::Match);
    else CHECK(r.verdict == Verdict::NoPredictor);
  }
  CHECK(s.pcn_count + s.apcn_count <= s.reports.size());
  CHECK_THROWS_AS(sweep_c(gf(3, 7), 5), Error);
}

TEST_CASE("cyclotomic classes") {
  CHECK(cyclotomic_class(11, 5, 25) == std::vector<std::uint64_t>{7, 11});
  CHECK(cyclotomic_representative(11, 5, 25) == 7);
  CHECK(cyclotomic_class(1, 2, 16) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(cyclotomic_class(5, 2, 16) == std::vector<std::uint64_t>{5, 10});
  CHECK_THROWS_AS(cyclotomic_class(0, 5, 25), Error);
  CHECK_THROWS_AS(cyclotomic_class(24, 5, 25), Error);
}

TEST_CASE("exponent scan") {
  const auto f25 = gf(5, 2);
  auto s = scan_exponents(f25, f25.minus_one(), 2);
  CHECK(s.dedup_exact);
  auto has_member = [&s](std::uint64_t d) {
    return std::any_of(s.rows.begin(), s.rows.end(), [d](const ScanRow& r) {
      return std::find(r.class_members.begin(), r.class_members.end(), d) != r.class_members.end();
    });
  };
  CHECK(has_member(11));
  // x^3 over GF(25) is (-1)-differentially 3-uniform, so it needs a higher cap.
  CHECK_FALSE(has_member(3));
  s = scan_exponents(f25, f25.minus_one(), 3);
  CHECK(has_member(3));
  CHECK(has_member(11));
  for (const auto& r : s.rows) {
    CHECK(r.d == r.class_members.front());
    CHECK(r.uniformity.value <= 3);
    // d and 5d mod 24 are never both reported.
    const std::uint64_t partner = r.d * 5 % 24;
    if (partner != r.d) {
      CHECK(std::none_of(s.rows.begin(), s.rows.end(), [partner](const ScanRow& o) { return o.d == partner; }));
    }
  }

  const auto f9 = gf(3, 2);
  s = scan_exponents(f9, f9.minus_one(), 1);
  CHECK_FALSE(s.rows.empty());
  for (const auto& r : s.rows) CHECK(r.spectrum.at(1) == 9);

  // c outside the prime subfield: classes are still collapsed, but flagged.
  CHECK_FALSE(scan_exponents(f9, Elem{3}, 9).dedup_exact);
  CHECK(spectrum_digest(verify_case(f25, 11, f25.minus_one()).computed) == "0:8,1:9,2:8");
  CHECK_THROWS_AS(scan_exponents(gf(3, 7), f9.one(), 2), Error);
}

TEST_CASE("identity fuzzing") {
  const auto r = fuzz_identities(1, 40, 125);
  CHECK(r.cases.size() == 40);
  CHECK(r.failed == 0);
  CHECK(r.passed == 40);
  for (const auto& c : r.cases) {
    CHECK(c.q <= 125);
    CHECK(c.key.d >= 1);
    CHECK(c.key.d + 2 <= c.q);
    CHECK(c.key.c != Elem{1});
    CHECK(c.identities.eq2 == CheckStatus::Passed);
  }
  // Same seed, same cases.
  const auto again = fuzz_identities(1, 40, 125);
  for (std::size_t i = 0; i < r.cases.size(); ++i) {
    CHECK(r.cases[i].key.d == again.cases[i].key.d);
    CHECK(r.cases[i].key.c == again.cases[i].key.c);
    CHECK(r.cases[i].q == again.cases[i].q);
  }
  CHECK_THROWS_AS(fuzz_identities(1, 1, 3), Error);
}

TEST_CASE("gamma report") {
  auto g = gamma_report(2, 1 << 22);
  CHECK(g.closed == 6);
  REQUIRE(g.direct.has_value());
  CHECK(*g.direct == 6);
  CHECK(g.equal);
  g = gamma_report(3, 100);
  CHECK(g.closed == -22);
  CHECK_FALSE(g.direct.has_value());
}
