#pragma once

#include <cstdint>

#include "cdiff/field.hpp"

namespace cdiff {

/// Number of roots of x^2 + a x + b in the field.
///
/// Characteristic 2: with a != 0 there are 2 roots when Tr(b / a^2) = 0 and
/// none otherwise; with a = 0 squaring is a bijection, so exactly 1.
/// Odd characteristic: 2, 1 or 0 as the discriminant a^2 - 4b is a nonzero
/// square, zero, or a nonsquare.
unsigned quadratic_solution_count(const FieldContext& f, Elem a, Elem b);

/// Sum over x of chi(a2 x^2 + a1 x + a0) in closed form: -chi(a2) when the
/// discriminant a1^2 - 4 a0 a2 is nonzero, (q - 1) chi(a2) otherwise.
/// Requires odd characteristic and a2 != 0.
std::int64_t char_sum_quadratic(const FieldContext& f, Elem a2, Elem a1, Elem a0);

/// Sum over x of chi(x (x - 1) (x + 1)) over GF(5^n), by enumeration.
std::int64_t gamma_5n_direct(const FieldContext& f);

/// Sizes of the four classes of x outside {0, -1} keyed by (chi(x), chi(x + 1)).
struct ChiPartition {
  std::uint64_t plus_plus = 0;    // chi(x) = 1,  chi(x+1) = 1
  std::uint64_t plus_minus = 0;   // chi(x) = 1,  chi(x+1) = -1
  std::uint64_t minus_plus = 0;   // chi(x) = -1, chi(x+1) = 1
  std::uint64_t minus_minus = 0;  // chi(x) = -1, chi(x+1) = -1

  std::uint64_t total() const noexcept { return plus_plus + plus_minus + minus_plus + minus_minus; }
  friend bool operator==(const ChiPartition&, const ChiPartition&) = default;
};

ChiPartition partition_by_chi(const FieldContext& f);

}  // namespace cdiff
