#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdiff/field.hpp"

namespace cdiff {

/// F(x) = x^d together with the multiplier c of the differential
/// F(x + a) - c F(x). The exponent is kept in [1, q - 1].
struct PowerMap {
  std::uint64_t d = 1;
  Elem c;
};

/// Reduces d modulo q - 1 into [1, q - 1]. x^d only depends on d mod (q - 1)
/// away from zero, and 0^d needs d >= 1, so d = 0 is rejected.
std::uint64_t normalize_exponent(std::uint64_t d, std::uint64_t q);

PowerMap make_power_map(const FieldContext& f, std::uint64_t d, Elem c);

/// x^d for every encoding x.
std::vector<std::uint32_t> power_table(const FieldContext& f, std::uint64_t d);

/// hist[b] = #{x : (x + 1)^d - c x^d = b}.
std::vector<std::uint32_t> delta_histogram(const FieldContext& f, const PowerMap& map);

std::uint64_t c_delta(const FieldContext& f, const PowerMap& map, Elem b);

/// #{x : F(x + a) - c F(x) = b}. Rows a != 0 reduce to the a = 1 row at
/// b / a^d; the a = 0 row counts solutions of (1 - c) x^d = b.
std::uint64_t c_ddt_entry(const FieldContext& f, const PowerMap& map, Elem a, Elem b);

struct CDiffSpectrum {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  Elem c;
  /// Largest i with omega_i > 0.
  unsigned uniformity = 0;
  /// i -> omega_i, the number of b with c_delta(b) = i. omega_0 is always present.
  std::map<unsigned, std::uint64_t> omega;

  std::uint64_t at(unsigned i) const {
    auto it = omega.find(i);
    return it == omega.end() ? 0 : it->second;
  }
};

CDiffSpectrum spectrum_from_histogram(std::uint64_t q, std::uint64_t d, Elem c,
                                      std::span<const std::uint32_t> histogram);

CDiffSpectrum c_spectrum(const FieldContext& f, const PowerMap& map);

enum class CClass { PcN, APcN, Uniform };

std::string to_string(CClass cls);

struct CUniformity {
  /// Maximum c-DDT entry over all (a, b), with a != 0 only when c = 1.
  unsigned value = 0;
  /// Maximum over the a = 1 row (the spectrum's own uniformity).
  unsigned spectrum_max = 0;
  /// Maximum over the a = 0 row; 0 when c = 1, where that row is excluded.
  unsigned zero_row_max = 0;
  CClass cls = CClass::Uniform;
};

CUniformity c_uniformity(const FieldContext& f, const PowerMap& map);
CUniformity c_uniformity(const FieldContext& f, const PowerMap& map, const CDiffSpectrum& spectrum);

struct QuadrupleCount {
  std::uint64_t value = 0;
  friend bool operator==(const QuadrupleCount&, const QuadrupleCount&) = default;
};

inline constexpr std::uint64_t kDefaultN4BudgetQ = 625;

/// Counts (x1, x2, x3, x4) with x1 - x2 + x3 - x4 = 0 and
/// x1^d - c x2^d + c x3^d - x4^d = 0 by looping over (x1, x2, x3).
/// Throws Error(BudgetExceeded) when q > budget_q.
QuadrupleCount n4_bruteforce(const FieldContext& f, const PowerMap& map,
                             std::uint64_t budget_q = kDefaultN4BudgetQ);

enum class CheckStatus { Passed, Failed, Skipped, NotApplicable };

std::string to_string(CheckStatus status);

struct IdentityReport {
  std::uint64_t sum_omega = 0;
  std::uint64_t sum_i_omega = 0;
  std::uint64_t sum_i2_omega = 0;
  bool eq1_count = false;     // sum omega_i = q
  bool eq1_weighted = false;  // sum i omega_i = q
  CheckStatus eq2 = CheckStatus::Skipped;
  std::optional<std::uint64_t> n4;
  std::uint64_t gcd_term = 0;  // gcd(d, q - 1)
  std::vector<std::string> violations;

  bool eq1_ok() const noexcept { return eq1_count && eq1_weighted; }
};

/// Checks sum omega_i = sum i omega_i = q and, when N4 is supplied and c != 1,
/// sum i^2 omega_i = (N4 - 1) / (q - 1) - gcd(d, q - 1). Failures are
/// recorded in the report rather than thrown.
IdentityReport check_identities(const CDiffSpectrum& spectrum,
                                std::optional<QuadrupleCount> n4 = std::nullopt);

}  // namespace cdiff
