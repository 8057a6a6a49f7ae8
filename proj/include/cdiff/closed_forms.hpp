#pragma once

// Closed-form c-differential spectra of power maps x^d with known
// structure, and a dispatcher deciding which of them applies to a case.
// Predictors work on pre-evaluated conditions (traces, characters, parity)
// so they are plain integer functions; thin overloads taking a FieldContext
// evaluate those conditions for a concrete c.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/numtheory.hpp"
#include "cdiff/spectrum.hpp"

namespace cdiff {

/// Exact rational with a positive denominator in lowest terms.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(i128 num, i128 den = 1);

  bool integral() const noexcept { return den == 1; }
  std::string str() const;

  friend Ratio operator+(Ratio a, Ratio b);
  friend Ratio operator-(Ratio a, Ratio b);
  friend Ratio operator*(Ratio a, Ratio b);
  friend Ratio operator/(Ratio a, Ratio b);
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

enum class TheoremId {
  InverseChar2,      // x^(2^n - 2), any c outside {0, 1}
  InverseOdd,        // x^(p^n - 2), p odd, c outside {0, 1, 4, 1/4}
  P3PlusThreeHalf,   // x^((3^n + 3)/2), c = -1, n even
  P3MinusThree,      // x^(3^n - 3), c = -1
  PK1HalfOneMod4,    // x^((p^k + 1)/2), c = -1, p = 1 mod 4
  PK1HalfThreeMod4,  // x^((p^k + 1)/2), c = -1, p = 3 mod 4, p > 7
  P5MinusThreeHalf,  // x^((5^n - 3)/2), c = -1
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_string(std::string_view name) noexcept;

using Conditions = std::vector<std::pair<std::string, std::int64_t>>;

struct SpectrumPrediction {
  TheoremId theorem = TheoremId::InverseChar2;
  std::uint64_t q = 0;
  Conditions conditions;
  /// The formulas exactly as stated; entries may be non-integral or negative
  /// when a stated formula is wrong for this case.
  std::map<unsigned, Ratio> omega;
  /// True iff every entry is a nonnegative integer and
  /// sum omega_i = sum i omega_i = q.
  bool consistent = false;
  /// When only omega_0 breaks the count identities, the value they force.
  std::optional<std::int64_t> repaired_omega0;
  std::string notes;
};

/// Sets consistent / repaired_omega0 / notes from the omega entries.
void evaluate_consistency(SpectrumPrediction& prediction);

SpectrumPrediction predict_inverse_char2(unsigned n, int trace_c, int trace_c_inv);
SpectrumPrediction predict_inverse_odd(std::uint64_t q, int chi_c2_minus_4c, int chi_1_minus_4c,
                                       int chi_c);
SpectrumPrediction predict_3n_plus3_half(unsigned n);
SpectrumPrediction predict_3n_minus3(unsigned n);
SpectrumPrediction predict_pk1_half(std::uint64_t p, unsigned n, unsigned k);
SpectrumPrediction predict_5n_minus3_half(unsigned n);

// Condition-evaluating overloads; they throw Error(Inapplicable) when c
// falls outside the theorem's hypotheses.
SpectrumPrediction predict_inverse_char2(const FieldContext& f, Elem c);
SpectrumPrediction predict_inverse_odd(const FieldContext& f, Elem c);

struct GammaValue {
  unsigned n = 0;
  std::int64_t value = 0;
};

/// Gamma_{5,n} = (-1)^(n+1) sum_{k=0}^{floor(n/2)} (-1)^k C(n, 2k) 2^(2k+1).
GammaValue gamma_5n_closed(unsigned n);

/// N4 for x^((5^n - 3)/2) with c = -1, from Gamma_{5,n}.
QuadrupleCount n4_closed_5n(unsigned n);

struct Applicable {
  TheoremId theorem;
  Conditions conditions;
  /// The k of (p^k + 1)/2 for the PK1 rows, 0 otherwise.
  unsigned k = 0;
};

/// Every predictor whose hypotheses hold for x^d over f with multiplier c.
/// Exponents are compared modulo q - 1.
std::vector<Applicable> dispatch(const FieldContext& f, std::uint64_t d, Elem c);

SpectrumPrediction predict(const FieldContext& f, Elem c, const Applicable& row);

std::vector<SpectrumPrediction> predict_all(const FieldContext& f, std::uint64_t d, Elem c);

}  // namespace cdiff
