#pragma once

// Reference arithmetic written independently of the library: digit vectors,
// schoolbook products, explicit reduction. Slow on purpose.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

class RefField {
public:
  /// modulus: monic, coefficients low-to-high, degree n.
  RefField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Found by search over all elements.
  std::uint32_t inv(std::uint32_t a) const;
  /// 1 if a is a nonzero square, -1 if a nonsquare, 0 for a = 0; by search.
  int chi(std::uint32_t a) const;
  /// sum_{i < n} a^(p^i), computed with pow.
  std::uint32_t trace(std::uint32_t a) const;

private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t value(const std::vector<std::uint32_t>& d) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::int8_t> square_;
};

/// Trial division by every monic polynomial of degree 1..n/2.
bool irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// omega map from counting, for every b, the x with (x+1)^d - c x^d = b.
std::map<unsigned, std::uint64_t> spectrum(const RefField& f, std::uint64_t d, std::uint32_t c);

/// Four nested loops over (x1, x2, x3, x4) checking both equations.
std::uint64_t n4(const RefField& f, std::uint64_t d, std::uint32_t c);

}  // namespace oracle
