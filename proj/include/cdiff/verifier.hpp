#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdiff/closed_forms.hpp"
#include "cdiff/field.hpp"
#include "cdiff/spectrum.hpp"

namespace cdiff {

struct VerifyOptions {
  /// Largest q for which a spectrum is enumerated.
  std::uint64_t budget_q = std::uint64_t{1} << 22;
  /// Largest q for which N4 is enumerated; above it the second-moment
  /// identity is reported SKIPPED.
  std::uint64_t n4_budget_q = kDefaultN4BudgetQ;
};

enum class Verdict { Match, Mismatch, NoPredictor, PredictorInconsistent };

std::string_view to_string(Verdict v) noexcept;

/// Identifies one computation: the field representation, d and c.
struct CaseKey {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;
  std::uint64_t d = 0;
  Elem c;
};

CaseKey make_case_key(const FieldContext& f, std::uint64_t d, Elem c);

struct PredictionOutcome {
  SpectrumPrediction prediction;
  /// Consistent and equal to the computed spectrum, zero entries ignored.
  bool matches = false;
  /// With omega_0 replaced by the repaired value, equal to the computed spectrum.
  bool repaired_matches = false;
};

struct VerifyReport {
  CaseKey key;
  CDiffSpectrum computed;
  CUniformity uniformity;
  IdentityReport identities;
  std::vector<PredictionOutcome> predictions;
  Verdict verdict = Verdict::NoPredictor;

  bool eq1_ok() const noexcept { return identities.eq1_ok(); }
  /// Empty when the second-moment identity was skipped or does not apply.
  std::optional<bool> eq2_ok() const noexcept;
};

/// True iff the two spectra agree on every positive entry.
bool same_spectrum(const std::map<unsigned, Ratio>& predicted, const std::map<unsigned, std::uint64_t>& computed);

/// Throws Error(BudgetExceeded) when q > options.budget_q.
VerifyReport verify_case(const FieldContext& f, std::uint64_t d, Elem c, const VerifyOptions& options = {});

struct SweepResult {
  std::uint64_t d = 0;
  std::vector<VerifyReport> reports;  // ordered by c encoding
  std::uint64_t pcn_count = 0;
  std::uint64_t apcn_count = 0;
};

inline constexpr std::uint64_t kDefaultSweepBudgetQ = 2048;

/// verify_case for every c other than 1. Throws Error(BudgetExceeded) when
/// q > sweep_budget_q.
SweepResult sweep_c(const FieldContext& f, std::uint64_t d, const VerifyOptions& options = {},
                    std::uint64_t sweep_budget_q = kDefaultSweepBudgetQ);

/// Smallest element of {d p^i mod (q - 1)}; d must lie in [1, q - 2].
std::uint64_t cyclotomic_representative(std::uint64_t d, std::uint64_t p, std::uint64_t q);

/// The class {d p^i mod (q - 1)}, sorted.
std::vector<std::uint64_t> cyclotomic_class(std::uint64_t d, std::uint64_t p, std::uint64_t q);

struct ScanRow {
  std::uint64_t d = 0;
  std::vector<std::uint64_t> class_members;
  CUniformity uniformity;
  CDiffSpectrum spectrum;
  std::string digest;
};

struct ScanResult {
  CaseKey field;  // d unused
  Elem c;
  unsigned max_uniformity = 0;
  /// x^(pd) with multiplier c has the spectrum of x^d with multiplier
  /// c^(1/p), so collapsing a class loses nothing only when c lies in GF(p).
  bool dedup_exact = false;
  std::vector<ScanRow> rows;
};

/// "i:omega_i" pairs joined by ',' in increasing i, positive entries only.
std::string spectrum_digest(const CDiffSpectrum& s);

/// Every class representative d in [1, q - 2] whose c-differential
/// uniformity is at most max_uniformity. Throws Error(BudgetExceeded) when
/// q > budget_q.
ScanResult scan_exponents(const FieldContext& f, Elem c, unsigned max_uniformity,
                          std::uint64_t budget_q = kDefaultSweepBudgetQ);

class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by modular reduction; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

private:
  std::uint64_t state_;
};

struct FuzzCase {
  CaseKey key;
  std::uint64_t q = 0;
  std::uint64_t gcd_term = 0;
  IdentityReport identities;
  bool passed = false;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::uint64_t budget_q = 0;
  std::vector<FuzzCase> cases;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

/// Draws `count` cases with p in {2, 3, 5, 7, 11, 13}, q <= budget_q,
/// d uniform in [1, q - 2] and c uniform over GF(q) \ {1}, then checks
/// both spectrum identities exactly, N4 by brute force.
FuzzReport fuzz_identities(std::uint64_t seed, std::uint64_t count, std::uint64_t budget_q);

struct GammaReport {
  unsigned n = 0;
  std::int64_t closed = 0;
  std::optional<std::int64_t> direct;
  bool equal = false;  // meaningful only with direct
};

/// Closed-form Gamma_{5,n}, plus the enumerated sum when 5^n <= budget_q.
GammaReport gamma_report(unsigned n, std::uint64_t budget_q);

}  // namespace cdiff
