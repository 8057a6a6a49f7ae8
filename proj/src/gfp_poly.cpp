#include "cdiff/detail/gfp_poly.hpp"

#include <algorithm>
#include <utility>

#include "cdiff/error.hpp"
#include "cdiff/numtheory.hpp"

namespace cdiff::detail {

void PrimePolyRing::trim(Poly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly PrimePolyRing::add(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0u) + std::uint64_t{i < b.size() ? b[i] : 0u};
    r[i] = static_cast<std::uint32_t>(s % p_);
  }
  trim(r);
  return r;
}

Poly PrimePolyRing::sub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0u;
    std::uint64_t y = i < b.size() ? b[i] : 0u;
    r[i] = static_cast<std::uint32_t>((x + p_ - y) % p_);
  }
  trim(r);
  return r;
}

Poly PrimePolyRing::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
  trim(r);
  return r;
}

std::uint32_t PrimePolyRing::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(p)");
  return static_cast<std::uint32_t>(pow_mod(a, p_ - 2, p_));
}

Poly PrimePolyRing::mod(Poly a, const Poly& m) const {
  if (m.empty()) throw Error(Errc::DivisionByZero, "polynomial reduction by zero");
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv(m.back());
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = a.back() * lead_inv % p_;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::uint64_t t = factor * m[j] % p_;
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p_ - t) % p_);
    }
    trim(a);
  }
  return a;
}

Poly PrimePolyRing::mulmod(const Poly& a, const Poly& b, const Poly& m) const {
  return mod(mul(a, b), m);
}

Poly PrimePolyRing::powmod(Poly base, std::uint64_t exp, const Poly& m) const {
  Poly result = mod(Poly{1}, m);
  base = mod(std::move(base), m);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

Poly PrimePolyRing::gcd(Poly a, Poly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const std::uint64_t lead_inv = inv(a.back());
  for (auto& coeff : a) coeff = static_cast<std::uint32_t>(coeff * lead_inv % p_);
  return a;
}

bool PrimePolyRing::is_irreducible(const Poly& f) const {
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    h = powmod(h, p_, f);
    const Poly g = gcd(f, sub(h, x));
    if (g.size() != 1) return false;
  }
  return true;
}

Poly monic_from_index(std::uint32_t p, std::uint32_t n, std::uint64_t index) {
  Poly f(n + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[n] = 1;
  return f;
}

}  // namespace cdiff::detail
