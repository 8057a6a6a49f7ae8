#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cdiff/field.hpp"

namespace cdiff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitInconsistent = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBudget = 65;

/// Resolves --d text against the field: a positive integer, or one of
/// inv, q-2, q-3, (q+3)/2, (q-3)/2, (p^k+1)/2 (the last needs k).
std::uint64_t parse_exponent(std::string_view text, const FieldContext& f, std::uint64_t k);

/// Resolves --c text: "-1" and other integers name k mod p in the prime
/// subfield, "e:VALUE" is a raw element encoding.
Elem parse_multiplier(std::string_view text, const FieldContext& f);

/// Runs one command line (without the program name) and returns the exit
/// status. Results go to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdiff
