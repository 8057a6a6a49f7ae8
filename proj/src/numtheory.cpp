#include "cdiff/numtheory.hpp"

#include <numeric>
#include <string>

#include "cdiff/error.hpp"

namespace cdiff {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::CharTwoUnsupported: return "CharTwoUnsupported";
    case Errc::LeadingCoeffZero: return "LeadingCoeffZero";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Inapplicable: return "Inapplicable";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t f = 3; f <= v / f; f += 2) {
    if (v % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f <= v / f; ++f) {
    if (v % f != 0) continue;
    out.push_back(f);
    while (v % f == 0) v /= f;
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(Errc::Overflow, "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  u128 result = 1;
  u128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t gcd_pk1(std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p must be prime");
  if (k == 0 || n == 0) throw Error(Errc::InvalidArgument, "k and n must be >= 1");
  const std::uint64_t g = std::gcd(k, n);
  if (p == 2) {
    const std::uint64_t num = checked_pow(2, std::gcd(2 * k, n)) - 1;
    const std::uint64_t den = checked_pow(2, g) - 1;
    return num / den;
  }
  if ((n / g) % 2 == 1) return 2;
  return checked_pow(p, g) + 1;
}

}  // namespace cdiff
