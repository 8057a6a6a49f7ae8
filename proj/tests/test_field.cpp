#include <doctest.h>

#include <numeric>

#include "cdiff/error.hpp"
#include "cdiff/field.hpp"
#include "cdiff/numtheory.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace cdiff;

namespace {

FieldContext gf(std::uint32_t p, std::uint32_t n) { return FieldContext::build(FieldSpec{p, n, std::nullopt}); }

template <typename F>
Errc error_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InvalidArgument;
}

// Monic irreducibles of degree n over GF(p): (1/n) sum_{d | n} mu(d) p^(n/d).
std::uint64_t necklace_count(std::uint64_t p, std::uint64_t n) {
  auto mobius = [](std::uint64_t m) {
    int sign = 1;
    for (std::uint64_t r = 2; r <= m; ++r) {
      if (m % r) continue;
      m /= r;
      if (m % r == 0) return 0;
      sign = -sign;
    }
    return sign;
  };
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) total += mobius(d) * static_cast<std::int64_t>(checked_pow(p, n / d));
  }
  return static_cast<std::uint64_t>(total) / n;
}

}  // namespace

TEST_CASE("number theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(4194301));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(checked_pow(3, 4) == 81);
  CHECK(error_code([] { checked_pow(2, 64); }) == Errc::Overflow);
  CHECK(pow_mod(5, 3, 8) == 5);
}

TEST_CASE("gcd(p^k + 1, p^n - 1) closed form") {
  CHECK(gcd_pk1(3, 1, 2) == 4);
  CHECK(gcd_pk1(3, 1, 3) == 2);
  CHECK(gcd_pk1(2, 1, 2) == 3);
  const auto o = props::gcd_lemma();
  CHECK_MESSAGE(o.ok, o.detail);
  CHECK(o.checked == 6 * 12 * 12);
  CHECK(error_code([] { gcd_pk1(4, 1, 1); }) == Errc::NotPrime);
}

TEST_CASE("field spec parsing") {
  auto s = parse_field_spec("5^4");
  CHECK(s.p == 5);
  CHECK(s.n == 4);
  CHECK_FALSE(s.modulus.has_value());
  s = parse_field_spec("3^2/1,0,1");
  REQUIRE(s.modulus.has_value());
  CHECK(*s.modulus == std::vector<std::uint32_t>{1, 0, 1});
  for (const char* bad : {"5", "5^", "^2", "x^2", "5^2/", "5^2/1,,1", "-5^2"}) {
    CAPTURE(bad);
    CHECK(error_code([bad] { parse_field_spec(bad); }) == Errc::InvalidArgument);
  }
}

TEST_CASE("field construction errors") {
  CHECK(error_code([] { gf(4, 1); }) == Errc::NotPrime);
  CHECK(error_code([] { gf(5, 0); }) == Errc::InvalidArgument);
  CHECK(error_code([] { gf(2, 23); }) == Errc::FieldTooLarge);
  // x^2 + 2 = (x - 1)(x + 1) over GF(3).
  CHECK(error_code([] { FieldContext::build(parse_field_spec("3^2/2,0,1")); }) == Errc::ReducibleModulus);
  CHECK(error_code([] { FieldContext::build(parse_field_spec("3^2/1,0")); }) == Errc::InvalidArgument);
  CHECK(error_code([] { FieldContext::build(parse_field_spec("3^2/1,0,2")); }) == Errc::InvalidArgument);
  CHECK(error_code([] { FieldContext::build(parse_field_spec("3^2/1,3,1")); }) == Errc::InvalidArgument);
  const auto f = gf(3, 2);
  CHECK(error_code([&] { f.inv(f.zero()); }) == Errc::DivisionByZero);
  CHECK(error_code([&] { f.element(9); }) == Errc::InvalidArgument);
  CHECK(error_code([] { gf(2, 3).quad_char(Elem{3}); }) == Errc::CharTwoUnsupported);
}

TEST_CASE("deterministic modulus choice") {
  const auto f8 = gf(2, 3);
  CHECK(std::vector<std::uint32_t>(f8.modulus().begin(), f8.modulus().end()) == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(gf(3, 2).spec_string() == "3^2/1,0,1");
  CHECK(gf(2, 4).spec_string() == "2^4/1,1,0,0,1");
  CHECK(gf(5, 1).spec_string() == "5^1/0,1");

  // The default is the first irreducible in index order, per trial division.
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 6}, {3, 3}, {3, 4}, {5, 2}, {7, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    const auto f = gf(p, n);
    const std::vector<std::uint32_t> chosen(f.modulus().begin(), f.modulus().end());
    CHECK(oracle::irreducible(p, chosen));
    std::uint64_t index = 0;
    for (std::uint32_t i = n; i-- > 0;) index = index * p + chosen[i];
    for (std::uint64_t smaller = 0; smaller < index; ++smaller) {
      std::vector<std::uint32_t> g(n + 1, 1);
      std::uint64_t v = smaller;
      for (std::uint32_t i = 0; i < n; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
      CHECK_FALSE(oracle::irreducible(p, g));
    }
  }
}

TEST_CASE("irreducible moduli enumeration") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 2}, {3, 4}, {5, 2}, {7, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    const auto all = irreducible_moduli(p, n, 1000000);
    CHECK(all.size() == necklace_count(p, n));
    for (const auto& m : all) CHECK(oracle::irreducible(p, m));
  }
  CHECK(irreducible_moduli(2, 2, 5).size() == 1);
}

TEST_CASE("field axioms and reference agreement") {
  SplitMix64 rng(7);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 3}, {2, 8}, {3, 1}, {3, 5}, {5, 3}, {7, 2}, {13, 2}, {31, 1}}) {
    const auto f = gf(p, n);
    CAPTURE(f.spec_string());
    auto o = props::field_axioms(f, rng, 400);
    CHECK_MESSAGE(o.ok, o.detail);
    o = props::log_tables(f);
    CHECK_MESSAGE(o.ok, o.detail);
    o = props::trace_properties(f, rng, 200);
    CHECK_MESSAGE(o.ok, o.detail);
  }
  // A non-default modulus gives a different but equally valid representation.
  const auto g = FieldContext::build(parse_field_spec("2^4/1,0,0,1,1"));
  auto o = props::field_axioms(g, rng, 400);
  CHECK_MESSAGE(o.ok, o.detail);
}

TEST_CASE("generator is the smallest primitive element") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {5, 2}}) {
    const auto f = gf(p, n);
    const auto ref = oracle::RefField(p, std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()));
    auto order = [&](std::uint32_t a) {
      std::uint32_t k = 1;
      for (std::uint32_t x = a; x != 1; x = ref.mul(x, a)) ++k;
      return k;
    };
    std::uint32_t expected = 1;
    while (order(expected) != f.q() - 1) ++expected;
    CHECK(f.generator().v == expected);
  }
  CHECK(gf(7, 1).generator().v == 3);
  CHECK(gf(5, 1).generator().v == 2);
}

TEST_CASE("trace and character on small fields") {
  const auto f = gf(2, 3);
  // Over GF(8) with x^3 + x + 1: Tr(1) = 1, Tr(x) = Tr(x^2) = 0.
  CHECK(f.trace(Elem{1}) == 1);
  CHECK(f.trace(Elem{2}) == 0);
  CHECK(f.trace(Elem{4}) == 0);
  const auto g = gf(5, 1);
  CHECK(g.quad_char(Elem{0}) == 0);
  CHECK(g.quad_char(Elem{1}) == 1);
  CHECK(g.quad_char(Elem{4}) == 1);
  CHECK(g.quad_char(Elem{2}) == -1);
  CHECK(g.quad_char(Elem{3}) == -1);
  CHECK(g.minus_one().v == 4);
  CHECK(g.from_int(-1) == g.minus_one());
  CHECK(gf(3, 2).from_int(4) == Elem{1});
}

TEST_CASE("character multiplicativity") {
  SplitMix64 rng(11);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 4}, {5, 2}, {7, 3}, {11, 2}, {13, 1}}) {
    const auto f = gf(p, n);
    CAPTURE(f.spec_string());
    const auto o = props::chi_multiplicative(f, rng, 500);
    CHECK_MESSAGE(o.ok, o.detail);
  }
}

TEST_CASE("fields above the table cap fall back to polynomial arithmetic") {
  FieldLimits limits;
  limits.table_cap = 64;
  const auto f = FieldContext::build(FieldSpec{3, 5, std::nullopt}, limits);
  CHECK_FALSE(f.has_tables());
  const auto g = gf(3, 5);
  CHECK(g.has_tables());
  CHECK(f.spec_string() == g.spec_string());
  for (std::uint32_t a = 0; a < f.q(); a += 7) {
    for (std::uint32_t b = 0; b < f.q(); b += 11) {
      CHECK(f.mul(Elem{a}, Elem{b}) == g.mul(Elem{a}, Elem{b}));
    }
    CHECK(f.quad_char(Elem{a}) == g.quad_char(Elem{a}));
    CHECK(f.trace(Elem{a}) == g.trace(Elem{a}));
    if (a) CHECK(f.inv(Elem{a}) == g.inv(Elem{a}));
  }
}
