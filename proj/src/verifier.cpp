#include "cdiff/verifier.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cdiff/character_sums.hpp"
#include "cdiff/error.hpp"
#include "cdiff/numtheory.hpp"

namespace cdiff {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::NoPredictor: return "NO_PREDICTOR";
    case Verdict::PredictorInconsistent: return "PREDICTOR_INCONSISTENT";
  }
  return "NO_PREDICTOR";
}

CaseKey make_case_key(const FieldContext& f, std::uint64_t d, Elem c) {
  const auto m = f.modulus();
  return CaseKey{f.p(), f.n(), std::vector<std::uint32_t>(m.begin(), m.end()), d, c};
}

std::optional<bool> VerifyReport::eq2_ok() const noexcept {
  switch (identities.eq2) {
    case CheckStatus::Passed: return true;
    case CheckStatus::Failed: return false;
    default: return std::nullopt;
  }
}

bool same_spectrum(const std::map<unsigned, Ratio>& predicted,
                   const std::map<unsigned, std::uint64_t>& computed) {
  for (const auto& [i, w] : predicted) {
    const auto it = computed.find(i);
    const std::uint64_t have = it == computed.end() ? 0 : it->second;
    if (!w.integral() || w.num < 0 || static_cast<std::uint64_t>(w.num) != have) return false;
  }
  for (const auto& [i, w] : computed) {
    if (w != 0 && !predicted.count(i)) return false;
  }
  return true;
}

VerifyReport verify_case(const FieldContext& f, std::uint64_t d, Elem c, const VerifyOptions& options) {
  if (f.q() > options.budget_q) {
    throw Error(Errc::BudgetExceeded, "spectrum enumeration needs q <= " + std::to_string(options.budget_q));
  }
  const PowerMap map = make_power_map(f, d, c);
  VerifyReport r;
  r.key = make_case_key(f, d, c);
  r.computed = c_spectrum(f, map);
  r.uniformity = c_uniformity(f, map, r.computed);

  std::optional<QuadrupleCount> n4;
  if (c != f.one() && f.q() <= options.n4_budget_q) n4 = n4_bruteforce(f, map, options.n4_budget_q);
  r.identities = check_identities(r.computed, n4);

  bool any_consistent = false;
  bool any_match = false;
  for (auto& pred : predict_all(f, d, c)) {
    PredictionOutcome out;
    out.matches = pred.consistent && same_spectrum(pred.omega, r.computed.omega);
    if (pred.repaired_omega0) {
      auto repaired = pred.omega;
      repaired[0] = Ratio::of(*pred.repaired_omega0);
      out.repaired_matches = same_spectrum(repaired, r.computed.omega);
    }
    any_consistent = any_consistent || pred.consistent;
    any_match = any_match || out.matches;
    out.prediction = std::move(pred);
    r.predictions.push_back(std::move(out));
  }
  if (any_match) r.verdict = Verdict::Match;
  else if (any_consistent) r.verdict = Verdict::Mismatch;
  else if (!r.predictions.empty()) r.verdict = Verdict::PredictorInconsistent;
  else r.verdict = Verdict::NoPredictor;
  return r;
}

SweepResult sweep_c(const FieldContext& f, std::uint64_t d, const VerifyOptions& options,
                    std::uint64_t sweep_budget_q) {
  if (f.q() > sweep_budget_q) {
    throw Error(Errc::BudgetExceeded, "c sweep needs q <= " + std::to_string(sweep_budget_q));
  }
  SweepResult s;
  s.d = d;
  for (std::uint32_t v = 0; v < f.q(); ++v) {
    if (Elem{v} == f.one()) continue;
    auto report = verify_case(f, d, Elem{v}, options);
    if (report.uniformity.cls == CClass::PcN) ++s.pcn_count;
    if (report.uniformity.cls == CClass::APcN) ++s.apcn_count;
    s.reports.push_back(std::move(report));
  }
  return s;
}

std::vector<std::uint64_t> cyclotomic_class(std::uint64_t d, std::uint64_t p, std::uint64_t q) {
  const std::uint64_t order = q - 1;
  if (d == 0 || d >= order) throw Error(Errc::InvalidArgument, "class members must lie in [1, q - 2]");
  std::vector<std::uint64_t> members;
  std::uint64_t e = d;
  do {
    members.push_back(e);
    e = e * p % order;
  } while (e != d);
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t cyclotomic_representative(std::uint64_t d, std::uint64_t p, std::uint64_t q) {
  return cyclotomic_class(d, p, q).front();
}

std::string spectrum_digest(const CDiffSpectrum& s) {
  std::string out;
  for (const auto& [i, w] : s.omega) {
    if (w == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i) + ':' + std::to_string(w);
  }
  return out;
}

ScanResult scan_exponents(const FieldContext& f, Elem c, unsigned max_uniformity, std::uint64_t budget_q) {
  if (f.q() > budget_q) {
    throw Error(Errc::BudgetExceeded, "exponent scan needs q <= " + std::to_string(budget_q));
  }
  if (c.v >= f.q()) throw Error(Errc::InvalidArgument, "c is not an element of the field");
  ScanResult result;
  result.field = make_case_key(f, 0, c);
  result.c = c;
  result.max_uniformity = max_uniformity;
  result.dedup_exact = f.in_prime_subfield(c);
  const std::uint64_t q = f.q();
  for (std::uint64_t d = 1; d + 1 < q; ++d) {
    auto members = cyclotomic_class(d, f.p(), q);
    if (members.front() != d) continue;
    const PowerMap map{d, c};
    ScanRow row;
    row.spectrum = c_spectrum(f, map);
    row.uniformity = c_uniformity(f, map, row.spectrum);
    if (row.uniformity.value > max_uniformity) continue;
    row.d = d;
    row.class_members = std::move(members);
    row.digest = spectrum_digest(row.spectrum);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

FuzzReport fuzz_identities(std::uint64_t seed, std::uint64_t count, std::uint64_t budget_q) {
  constexpr std::array<std::uint32_t, 6> kPrimes{2, 3, 5, 7, 11, 13};
  if (budget_q < 4) throw Error(Errc::InvalidArgument, "fuzz budget must allow q >= 4");
  FuzzReport report;
  report.seed = seed;
  report.count = count;
  report.budget_q = budget_q;
  SplitMix64 rng(seed);
  while (report.cases.size() < count) {
    const std::uint32_t p = kPrimes[rng.below(kPrimes.size())];
    // Admissible degrees; characteristic 2 needs q >= 4 so that [1, q - 2]
    // and GF(q) \ {1} both hold a nontrivial choice.
    std::vector<std::uint32_t> degrees;
    std::uint64_t q = p;
    for (std::uint32_t n = 1; q <= budget_q; ++n, q *= p) {
      if (p != 2 || n >= 2) degrees.push_back(n);
    }
    if (degrees.empty()) continue;
    const std::uint32_t n = degrees[rng.below(degrees.size())];
    const auto f = FieldContext::build(FieldSpec{p, n, std::nullopt});
    const std::uint64_t d = 1 + rng.below(f.q() - 2);
    std::uint32_t cv = static_cast<std::uint32_t>(rng.below(f.q() - 1));
    if (cv >= f.one().v) ++cv;
    const Elem c{cv};
    const PowerMap map{d, c};
    FuzzCase fc;
    fc.key = make_case_key(f, d, c);
    fc.q = f.q();
    fc.gcd_term = std::gcd(d, std::uint64_t{f.q()} - 1);
    fc.identities = check_identities(c_spectrum(f, map), n4_bruteforce(f, map, budget_q));
    fc.passed = fc.identities.eq1_ok() && fc.identities.eq2 == CheckStatus::Passed;
    ++(fc.passed ? report.passed : report.failed);
    report.cases.push_back(std::move(fc));
  }
  return report;
}

GammaReport gamma_report(unsigned n, std::uint64_t budget_q) {
  GammaReport r;
  r.n = n;
  r.closed = gamma_5n_closed(n).value;
  std::uint64_t q = 1;
  bool fits = true;
  for (unsigned i = 0; i < n && fits; ++i) {
    q *= 5;
    fits = q <= budget_q;
  }
  if (fits) {
    const auto f = FieldContext::build(FieldSpec{5, n, std::nullopt});
    r.direct = gamma_5n_direct(f);
    r.equal = *r.direct == r.closed;
  }
  return r;
}

}  // namespace cdiff
