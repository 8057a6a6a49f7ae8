#include <doctest.h>

#include <cmath>

#include "cdiff/character_sums.hpp"
#include "cdiff/closed_forms.hpp"
#include "cdiff/error.hpp"
#include "support/properties.hpp"

using namespace cdiff;

namespace {

FieldContext gf(std::uint32_t p, std::uint32_t n) { return FieldContext::build(FieldSpec{p, n, std::nullopt}); }

}  // namespace

TEST_CASE("quadratic root counts against enumeration") {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 1}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 1}, {7, 2}, {11, 1}, {13, 2}}) {
    const auto f = gf(p, n);
    CAPTURE(f.spec_string());
    const auto o = props::quadratic_counts(f);
    CHECK_MESSAGE(o.ok, o.detail);
  }
  // Squaring is a bijection in characteristic 2: x^2 = b has one root.
  const auto f = gf(2, 4);
  for (std::uint32_t b = 0; b < f.q(); ++b) CHECK(quadratic_solution_count(f, f.zero(), Elem{b}) == 1);
}

TEST_CASE("quadratic character sums against direct sums") {
  const auto g = gf(5, 1);
  // sum chi(x^2) over GF(5): four nonzero squares.
  CHECK(char_sum_quadratic(g, g.one(), g.zero(), g.zero()) == 4);
  // sum chi(x^2 + 1) over GF(5): x = 0..4 gives 1, 2, 0, 0, 2 -> 1 - 1 + 0 + 0 - 1.
  CHECK(char_sum_quadratic(g, g.one(), g.zero(), g.one()) == -1);

  SplitMix64 rng(3);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 4}, {5, 3}, {7, 4}, {11, 2}, {13, 2}}) {
    const auto f = gf(p, n);
    CAPTURE(f.spec_string());
    const auto o = props::quadratic_char_sums(f, rng, 200);
    CHECK_MESSAGE(o.ok, o.detail);
  }
  CHECK_THROWS_AS(char_sum_quadratic(g, g.zero(), g.one(), g.one()), Error);
  const auto two = gf(2, 3);
  CHECK_THROWS_AS(char_sum_quadratic(two, two.one(), two.one(), two.one()), Error);
}

TEST_CASE("cubic character sum over GF(5^n)") {
  CHECK(gamma_5n_direct(gf(5, 1)) == 2);
  CHECK(gamma_5n_direct(gf(5, 2)) == 6);
  for (unsigned n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto f = gf(5, n);
    const std::int64_t direct = gamma_5n_direct(f);
    CHECK(direct == gamma_5n_closed(n).value);
    CHECK(static_cast<double>(std::llabs(direct)) <= 2.0 * std::sqrt(static_cast<double>(f.q())));
  }
  try {
    gamma_5n_direct(gf(7, 1));
    FAIL("expected WrongCharacteristic");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongCharacteristic);
  }
}

TEST_CASE("partition by character pairs") {
  // GF(5), x in {1, 2, 3}: (chi(1), chi(2)) = (1, -1), (chi(2), chi(3)) = (-1, -1), (chi(3), chi(4)) = (-1, 1).
  CHECK(partition_by_chi(gf(5, 1)) == ChiPartition{0, 1, 1, 1});
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{7, 1}, {3, 3}, {5, 2}, {11, 1}, {13, 2}}) {
    const auto f = gf(p, n);
    CAPTURE(f.spec_string());
    const auto part = partition_by_chi(f);
    CHECK(part.total() == f.q() - 2);
    // sum chi(x (x + 1)) = -1 (monic quadratic, nonzero discriminant); the
    // excluded x = 0, -1 contribute 0.
    const auto pp = static_cast<std::int64_t>(part.plus_plus), mm = static_cast<std::int64_t>(part.minus_minus);
    const auto pm = static_cast<std::int64_t>(part.plus_minus), mp = static_cast<std::int64_t>(part.minus_plus);
    CHECK(pp + mm - pm - mp == -1);
  }
  CHECK_THROWS_AS(partition_by_chi(gf(2, 3)), Error);
}

TEST_CASE("root character property over GF(5^n)") {
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto o = props::p5_root_character(n);
    CHECK_MESSAGE(o.ok, o.detail);
    checked += o.checked;
  }
  CHECK(checked > 0);
}
