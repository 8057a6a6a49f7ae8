#pragma once

#include <cstdint>
#include <vector>

namespace cdiff {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

bool is_prime(std::uint64_t v) noexcept;

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

/// base^exp, throwing Errc::Overflow if the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

/// gcd(p^k + 1, p^n - 1) by the three-branch closed form for prime p:
///   p = 2:              (2^gcd(2k,n) - 1) / (2^gcd(k,n) - 1)
///   n/gcd(n,k) odd:     2
///   n/gcd(n,k) even:    p^gcd(k,n) + 1
std::uint64_t gcd_pk1(std::uint64_t p, std::uint64_t k, std::uint64_t n);

}  // namespace cdiff
