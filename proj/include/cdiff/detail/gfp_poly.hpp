#pragma once

// Dense univariate polynomials over a prime field GF(p). Coefficients are
// stored low-to-high and kept trimmed (no trailing zeros); the zero
// polynomial is the empty vector.

#include <cstdint>
#include <vector>

namespace cdiff::detail {

using Poly = std::vector<std::uint32_t>;

class PrimePolyRing {
public:
  explicit PrimePolyRing(std::uint32_t p) : p_(p) {}

  std::uint32_t p() const noexcept { return p_; }

  void trim(Poly& a) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  /// Remainder of a modulo a nonzero m.
  Poly mod(Poly a, const Poly& m) const;
  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const;
  Poly powmod(Poly base, std::uint64_t exp, const Poly& m) const;
  /// Monic gcd.
  Poly gcd(Poly a, Poly b) const;

  std::uint32_t inv(std::uint32_t a) const;

  /// Ben-Or test: f of degree n >= 1 is irreducible iff
  /// gcd(f, x^(p^i) - x) = 1 for every 1 <= i <= n/2.
  bool is_irreducible(const Poly& f) const;

private:
  std::uint32_t p_;
};

/// Monic degree-n polynomials in the canonical order: the index runs over
/// the n low coefficients as a base-p number, constant term varying fastest.
Poly monic_from_index(std::uint32_t p, std::uint32_t n, std::uint64_t index);

}  // namespace cdiff::detail
