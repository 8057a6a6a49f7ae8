#include "cdiff/field.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <sstream>

#include "cdiff/detail/gfp_poly.hpp"
#include "cdiff/error.hpp"
#include "cdiff/numtheory.hpp"

namespace cdiff {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error(Errc::InvalidArgument,
                "malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    throw Error(Errc::InvalidArgument, "field must look like p^n or p^n/c0,...,cn");
  }
  const auto slash = text.find('/', caret);
  FieldSpec spec;
  const std::uint64_t p = parse_uint(text.substr(0, caret), "characteristic");
  const std::uint64_t n = parse_uint(text.substr(caret + 1, slash == std::string_view::npos
                                                                ? std::string_view::npos
                                                                : slash - caret - 1),
                                     "degree");
  if (p > std::numeric_limits<std::uint32_t>::max() || n > 64) {
    throw Error(Errc::FieldTooLarge, "field too large");
  }
  spec.p = static_cast<std::uint32_t>(p);
  spec.n = static_cast<std::uint32_t>(n);
  if (slash != std::string_view::npos) {
    std::vector<std::uint32_t> coeffs;
    std::string_view rest = text.substr(slash + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::uint64_t c = parse_uint(rest.substr(0, comma), "modulus coefficient");
      if (c > std::numeric_limits<std::uint32_t>::max()) {
        throw Error(Errc::InvalidArgument, "modulus coefficient out of range");
      }
      coeffs.push_back(static_cast<std::uint32_t>(c));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    spec.modulus = std::move(coeffs);
  }
  return spec;
}

std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p, std::uint32_t n,
                                                            std::size_t count) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p must be prime");
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  const std::uint64_t total = checked_pow(p, n);
  detail::PrimePolyRing ring(p);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t index = 0; index < total && out.size() < count; ++index) {
    auto f = detail::monic_from_index(p, n, index);
    if (ring.is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

FieldContext FieldContext::build(const FieldSpec& spec, const FieldLimits& limits) {
  if (!is_prime(spec.p)) {
    throw Error(Errc::NotPrime, "p must be prime (got " + std::to_string(spec.p) + ")");
  }
  if (spec.n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    q *= spec.p;
    if (q > limits.max_q || q > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(Errc::FieldTooLarge, "field order " + std::to_string(spec.p) + "^" +
                                           std::to_string(spec.n) + " exceeds the cap of " +
                                           std::to_string(limits.max_q));
    }
  }

  FieldContext ctx;
  ctx.p_ = spec.p;
  ctx.n_ = spec.n;
  ctx.q_ = static_cast<std::uint32_t>(q);

  detail::PrimePolyRing ring(spec.p);
  if (spec.modulus) {
    const auto& m = *spec.modulus;
    if (m.size() != spec.n + 1) {
      throw Error(Errc::InvalidArgument, "modulus must have n + 1 coefficients");
    }
    for (auto c : m) {
      if (c >= spec.p) throw Error(Errc::InvalidArgument, "modulus coefficient not reduced mod p");
    }
    if (m.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
    if (!ring.is_irreducible(m)) {
      throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" +
                                              std::to_string(spec.p) + ")");
    }
    ctx.modulus_ = m;
  } else {
    for (std::uint64_t index = 0;; ++index) {
      auto f = detail::monic_from_index(spec.p, spec.n, index);
      if (ring.is_irreducible(f)) {
        ctx.modulus_ = std::move(f);
        break;
      }
    }
  }

  // Smallest element whose order is exactly q - 1.
  const auto factors = prime_factors(q - 1);
  for (std::uint32_t v = 1; v < ctx.q_; ++v) {
    const Elem g{v};
    bool primitive = true;
    for (auto r : factors) {
      if (ctx.pow_square_multiply(g, (q - 1) / r) == ctx.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.generator_ = g;
      break;
    }
  }

  ctx.basis_trace_.resize(spec.n);
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < spec.n; ++i, place *= spec.p) {
    Elem term{place};
    Elem sum{0};
    for (std::uint32_t j = 0; j < spec.n; ++j) {
      sum = ctx.add(sum, term);
      term = ctx.pow_square_multiply(term, spec.p);
    }
    ctx.basis_trace_[i] = sum.v;  // lies in GF(p), so the encoding is the value
  }

  if (q <= limits.table_cap) {
    const std::uint32_t order = ctx.q_ - 1;
    ctx.log_.assign(ctx.q_, 0);
    ctx.antilog_.assign(2 * std::size_t{order}, 0);
    Elem x = ctx.one();
    for (std::uint32_t k = 0; k < order; ++k) {
      ctx.antilog_[k] = x.v;
      ctx.antilog_[k + order] = x.v;
      ctx.log_[x.v] = k;
      x = ctx.mul_poly(x, ctx.generator_);
    }

    std::vector<std::uint32_t> traces(ctx.q_);
    for (std::uint32_t v = 0; v < ctx.q_; ++v) traces[v] = ctx.trace(Elem{v});
    ctx.trace_table_ = std::move(traces);

    if (spec.p != 2) {
      ctx.chi_table_.assign(ctx.q_, 0);
      for (std::uint32_t k = 0; k < order; ++k) {
        ctx.chi_table_[ctx.antilog_[k]] = (k % 2 == 0) ? 1 : -1;
      }
    }
  }
  return ctx;
}

std::string FieldContext::spec_string() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(n_) + "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(modulus_[i]);
  }
  return s;
}

Elem FieldContext::from_int(std::int64_t k) const noexcept {
  const std::int64_t p = p_;
  return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elem FieldContext::element(std::uint64_t value) const {
  if (value >= q_) {
    throw Error(Errc::InvalidArgument, "element encoding " + std::to_string(value) +
                                           " is outside GF(" + std::to_string(q_) + ")");
  }
  return Elem{static_cast<std::uint32_t>(value)};
}

std::uint32_t FieldContext::add_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  while (a != 0 || b != 0) {
    std::uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FieldContext::sub_raw(std::uint32_t a, std::uint32_t b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return a >= b ? a - b : a + p_ - b;
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  while (a != 0 || b != 0) {
    const std::uint32_t da = a % p_;
    const std::uint32_t db = b % p_;
    r += (da >= db ? da - db : da + p_ - db) * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FieldContext::neg_raw(std::uint32_t a) const noexcept { return sub_raw(0, a); }

Elem FieldContext::mul_poly(Elem a, Elem b) const noexcept {
  std::array<std::uint64_t, 64> prod{};
  std::array<std::uint32_t, 32> da{};
  std::array<std::uint32_t, 32> db{};
  std::uint32_t x = a.v;
  std::uint32_t y = b.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    da[i] = x % p_;
    db[i] = y % p_;
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    }
  }
  // Monic modulus: X^n = -(m_0 + ... + m_{n-1} X^{n-1}).
  for (std::uint32_t k = 2 * n_ - 1; k-- > n_;) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    const std::uint32_t shift = k - n_;
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[shift + j] = (prod[shift + j] + (p_ - top) * modulus_[j]) % p_;
    }
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = n_; i-- > 0;) r = r * p_ + static_cast<std::uint32_t>(prod[i]);
  return Elem{r};
}

Elem FieldContext::mul(Elem a, Elem b) const noexcept {
  if (a.v == 0 || b.v == 0) return zero();
  if (!log_.empty()) return Elem{antilog_[log_[a.v] + log_[b.v]]};
  return mul_poly(a, b);
}

Elem FieldContext::inv(Elem a) const {
  if (a.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!log_.empty()) {
    const std::uint32_t order = q_ - 1;
    return Elem{antilog_[(order - log_[a.v]) % order]};
  }
  return pow_square_multiply(a, q_ - 2);
}

Elem FieldContext::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.v == 0) return zero();
  if (!log_.empty()) {
    const std::uint64_t order = q_ - 1;
    return Elem{antilog_[(std::uint64_t{log_[a.v]} * (e % order)) % order]};
  }
  return pow_square_multiply(a, e);
}

Elem FieldContext::pow_square_multiply(Elem a, std::uint64_t e) const noexcept {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul_poly(result, base);
    base = mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldContext::log(Elem a) const {
  if (a.v == 0) throw Error(Errc::DivisionByZero, "log of zero");
  if (log_.empty()) throw Error(Errc::FieldTooLarge, "log tables not built for this field");
  return log_[a.v];
}

Elem FieldContext::antilog(std::uint64_t k) const noexcept {
  const std::uint64_t order = q_ - 1;
  if (!antilog_.empty()) return Elem{antilog_[k % order]};
  return pow_square_multiply(generator_, k % order);
}

std::uint32_t FieldContext::trace(Elem a) const noexcept {
  if (!trace_table_.empty()) return trace_table_[a.v];
  std::uint64_t t = 0;
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < n_; ++i) {
    t += std::uint64_t{x % p_} * basis_trace_[i];
    x /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

int FieldContext::quad_char(Elem a) const {
  if (p_ == 2) throw Error(Errc::CharTwoUnsupported, "quadratic character needs odd characteristic");
  if (!chi_table_.empty()) return chi_table_[a.v];
  if (a.v == 0) return 0;
  return pow_square_multiply(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::vector<std::uint32_t> FieldContext::digits(Elem a) const {
  std::vector<std::uint32_t> d(n_);
  std::uint32_t x = a.v;
  for (auto& digit : d) {
    digit = x % p_;
    x /= p_;
  }
  return d;
}

Elem FieldContext::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > n_) throw Error(Errc::InvalidArgument, "too many digits for this field");
  std::uint32_t r = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= p_) throw Error(Errc::InvalidArgument, "digit not reduced mod p");
    r = r * p_ + digits[i];
  }
  return Elem{r};
}

std::string FieldContext::to_string(Elem a) const {
  if (a.v == 0) return "0";
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || d[i] != 1) os << d[i];
    if (i > 0) {
      if (d[i] != 1) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

}  // namespace cdiff
