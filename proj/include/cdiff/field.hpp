#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdiff {

/// An element of GF(p^n). The value packs the polynomial coefficients as
/// little-endian base-p digits, so 0 <= value < p^n.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  /// Monic modulus, coefficients low-to-high (n + 1 entries). Selected
  /// deterministically when absent.
  std::optional<std::vector<std::uint32_t>> modulus;
};

struct FieldLimits {
  /// Largest field order a context may be built for.
  std::uint64_t max_q = std::uint64_t{1} << 22;
  /// Log/antilog, trace and character tables exist only up to this order.
  std::uint64_t table_cap = std::uint64_t{1} << 22;
};

/// Parses "p^n" or "p^n/c0,c1,...,cn" (modulus coefficients low-to-high).
/// Throws Error(InvalidArgument) on malformed text; primality and
/// irreducibility are checked later by FieldContext::build.
FieldSpec parse_field_spec(std::string_view text);

/// The smallest `count` monic irreducible polynomials of degree n over GF(p)
/// in canonical order (constant term varying fastest).
std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p, std::uint32_t n,
                                                            std::size_t count);

/// Immutable arithmetic context for one concrete representation of GF(p^n).
/// All member functions are const and safe to call concurrently.
class FieldContext {
public:
  static FieldContext build(const FieldSpec& spec, const FieldLimits& limits = {});

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return q_; }
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  Elem generator() const noexcept { return generator_; }
  bool has_tables() const noexcept { return !log_.empty(); }

  /// "p^n/c0,...,cn" naming this exact representation.
  std::string spec_string() const;

  Elem zero() const noexcept { return Elem{0}; }
  Elem one() const noexcept { return Elem{1}; }
  Elem minus_one() const noexcept { return Elem{p_ - 1}; }
  /// k mod p as an element of the prime subfield.
  Elem from_int(std::int64_t k) const noexcept;
  /// Raw encoding; throws InvalidArgument unless value < q.
  Elem element(std::uint64_t value) const;

  Elem add(Elem a, Elem b) const noexcept { return Elem{add_raw(a.v, b.v)}; }
  Elem sub(Elem a, Elem b) const noexcept { return Elem{sub_raw(a.v, b.v)}; }
  Elem neg(Elem a) const noexcept { return Elem{neg_raw(a.v)}; }
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws Error(DivisionByZero) for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e with 0^0 = 1; uses the log tables when present.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^e by square-and-multiply on polynomial products; never reads the tables.
  Elem pow_square_multiply(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }
  bool in_prime_subfield(Elem a) const noexcept { return frobenius(a) == a; }

  /// Discrete logarithm to the base generator(); requires tables and a != 0.
  std::uint32_t log(Elem a) const;
  Elem antilog(std::uint64_t k) const noexcept;

  /// Absolute trace onto GF(p).
  std::uint32_t trace(Elem a) const noexcept;
  /// Quadratic character in {-1, 0, +1}; throws CharTwoUnsupported for p = 2.
  int quad_char(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;
  std::string to_string(Elem a) const;

  // Raw-encoding arithmetic used by the enumeration loops.
  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub_raw(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_raw(std::uint32_t a) const noexcept;
  /// a + 1, touching only the constant digit.
  std::uint32_t inc_raw(std::uint32_t a) const noexcept {
    return (a % p_ == p_ - 1) ? a - (p_ - 1) : a + 1;
  }

private:
  FieldContext() = default;

  Elem mul_poly(Elem a, Elem b) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem generator_;
  std::vector<std::uint32_t> log_;
  // Two periods long so that log a + log b indexes without a reduction.
  std::vector<std::uint32_t> antilog_;
  std::vector<std::uint32_t> trace_table_;
  std::vector<std::int8_t> chi_table_;
  // Tr(X^i) for the polynomial basis; trace is linear in the digits.
  std::vector<std::uint32_t> basis_trace_;
};

// Free-function spellings of the core operations.

inline FieldContext build_context(const FieldSpec& spec, const FieldLimits& limits = {}) {
  return FieldContext::build(spec, limits);
}
inline Elem ff_add(const FieldContext& f, Elem a, Elem b) { return f.add(a, b); }
inline Elem ff_sub(const FieldContext& f, Elem a, Elem b) { return f.sub(a, b); }
inline Elem ff_mul(const FieldContext& f, Elem a, Elem b) { return f.mul(a, b); }
inline Elem ff_inv(const FieldContext& f, Elem a) { return f.inv(a); }
inline Elem ff_pow(const FieldContext& f, Elem a, std::uint64_t e) { return f.pow(a, e); }
inline std::uint32_t trace_abs(const FieldContext& f, Elem a) { return f.trace(a); }
inline int quad_char(const FieldContext& f, Elem a) { return f.quad_char(a); }

}  // namespace cdiff
