#include "cdiff/closed_forms.hpp"

#include <array>
#include <limits>
#include <numeric>

#include "cdiff/error.hpp"
#include "cdiff/numtheory.hpp"

namespace cdiff {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::Overflow, "closed-form value exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

constexpr std::array<std::pair<TheoremId, std::string_view>, 7> kTheoremNames{{
    {TheoremId::InverseChar2, "INV_CHAR2"},
    {TheoremId::InverseOdd, "INV_ODD"},
    {TheoremId::P3PlusThreeHalf, "P3_PLUS3_HALF"},
    {TheoremId::P3MinusThree, "P3_MINUS3"},
    {TheoremId::PK1HalfOneMod4, "PK1_HALF_1MOD4"},
    {TheoremId::PK1HalfThreeMod4, "PK1_HALF_3MOD4"},
    {TheoremId::P5MinusThreeHalf, "P5_MINUS3_HALF"},
}};

Ratio R(std::int64_t v) { return Ratio::of(v); }

[[noreturn]] void inapplicable(std::string_view theorem, const std::string& why) {
  throw Error(Errc::Inapplicable, std::string(theorem) + ": " + why);
}

SpectrumPrediction make_prediction(TheoremId id, std::uint64_t q, Conditions conditions,
                                   std::map<unsigned, Ratio> omega) {
  SpectrumPrediction pred;
  pred.theorem = id;
  pred.q = q;
  pred.conditions = std::move(conditions);
  pred.omega = std::move(omega);
  evaluate_consistency(pred);
  return pred;
}

std::int64_t pow3(unsigned n) { return static_cast<std::int64_t>(checked_pow(3, n)); }

}  // namespace

Ratio Ratio::of(i128 num, i128 den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio{narrow(num), narrow(den)};
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio operator+(Ratio a, Ratio b) {
  return Ratio::of(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                   static_cast<i128>(a.den) * b.den);
}

Ratio operator-(Ratio a, Ratio b) { return a + Ratio{-b.num, b.den}; }

Ratio operator*(Ratio a, Ratio b) {
  return Ratio::of(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
}

Ratio operator/(Ratio a, Ratio b) {
  return Ratio::of(static_cast<i128>(a.num) * b.den, static_cast<i128>(a.den) * b.num);
}

std::string_view to_string(TheoremId id) noexcept {
  for (const auto& [tid, name] : kTheoremNames) {
    if (tid == id) return name;
  }
  return "UNKNOWN";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) noexcept {
  for (const auto& [tid, tname] : kTheoremNames) {
    if (tname == name) return tid;
  }
  return std::nullopt;
}

void evaluate_consistency(SpectrumPrediction& pred) {
  const Ratio q = R(static_cast<std::int64_t>(pred.q));
  Ratio sum = R(0);
  Ratio weighted = R(0);
  Ratio sum_rest = R(0);
  bool all_valid = true;
  bool rest_valid = true;
  for (const auto& [i, w] : pred.omega) {
    sum = sum + w;
    weighted = weighted + R(i) * w;
    const bool ok = w.integral() && w.num >= 0;
    all_valid = all_valid && ok;
    if (i != 0) {
      sum_rest = sum_rest + w;
      rest_valid = rest_valid && ok;
    }
  }
  pred.consistent = all_valid && sum == q && weighted == q;
  pred.repaired_omega0.reset();
  pred.notes.clear();
  if (pred.consistent) return;

  std::string why;
  for (const auto& [i, w] : pred.omega) {
    if (!w.integral()) why += "omega_" + std::to_string(i) + " = " + w.str() + " is not an integer; ";
    else if (w.num < 0) why += "omega_" + std::to_string(i) + " = " + w.str() + " is negative; ";
  }
  if (sum != q) why += "sum omega_i = " + sum.str() + " != q = " + q.str() + "; ";
  if (weighted != q) why += "sum i*omega_i = " + weighted.str() + " != q; ";
  pred.notes = why;

  const Ratio forced = q - sum_rest;
  if (rest_valid && weighted == q && forced.integral() && forced.num >= 0) {
    pred.repaired_omega0 = forced.num;
    const Ratio stated = pred.omega.count(0) ? pred.omega.at(0) : R(0);
    pred.notes += "stated omega_0 = " + stated.str() + "; the count identity forces omega_0 = " +
                  forced.str();
  }
}

SpectrumPrediction predict_inverse_char2(unsigned n, int trace_c, int trace_c_inv) {
  if (n < 2) inapplicable("INV_CHAR2", "needs n >= 2 so that c outside {0, 1} exists");
  if ((trace_c != 0 && trace_c != 1) || (trace_c_inv != 0 && trace_c_inv != 1)) {
    throw Error(Errc::InvalidArgument, "traces over GF(2) must be 0 or 1");
  }
  const std::int64_t half = static_cast<std::int64_t>(checked_pow(2, n - 1));
  const std::uint64_t q = checked_pow(2, n);
  Conditions cond{{"Tr(c)", trace_c}, {"Tr(1/c)", trace_c_inv}};
  std::map<unsigned, Ratio> omega;
  if (trace_c == 1 && trace_c_inv == 1) {
    omega = {{0, R(half - 2)}, {1, R(4)}, {2, R(half - 2)}};
  } else if (trace_c == 0 && trace_c_inv == 0) {
    omega = {{0, R(half)}, {1, R(2)}, {2, R(half - 4)}, {3, R(2)}};
  } else {
    omega = {{0, R(half - 1)}, {1, R(3)}, {2, R(half - 3)}, {3, R(1)}};
  }
  return make_prediction(TheoremId::InverseChar2, q, std::move(cond), std::move(omega));
}

SpectrumPrediction predict_inverse_odd(std::uint64_t q, int chi_c2_minus_4c, int chi_1_minus_4c,
                                       int chi_c) {
  if (q % 2 == 0) inapplicable("INV_ODD", "needs odd characteristic");
  for (int v : {chi_c2_minus_4c, chi_1_minus_4c, chi_c}) {
    if (v != 1 && v != -1) inapplicable("INV_ODD", "c in {0, 4, 1/4} has no stated spectrum");
  }
  const auto Q = static_cast<std::int64_t>(q);
  auto half = [Q](std::int64_t shift) { return Ratio::of(Q + shift, 2); };
  Conditions cond{{"chi(c^2-4c)", chi_c2_minus_4c}, {"chi(1-4c)", chi_1_minus_4c}, {"chi(c)", chi_c}};
  std::map<unsigned, Ratio> omega;
  if (chi_c2_minus_4c == -1 && chi_1_minus_4c == -1) {
    if (chi_c == -1) {
      omega = {{0, half(-3)}, {1, R(3)}, {2, half(-3)}};  // (i)
    } else {
      omega = {{0, half(-5)}, {1, R(5)}, {2, half(-5)}};  // (ii)
    }
  } else if (chi_c2_minus_4c * chi_1_minus_4c == -1) {
    if (chi_c == -1) {
      omega = {{0, half(-1)}, {1, R(2)}, {2, half(-5)}, {3, R(1)}};  // (iii)
    } else {
      omega = {{0, half(-3)}, {1, R(4)}, {2, half(-7)}, {3, R(1)}};  // (iv)
    }
  } else {
    if (chi_c == -1) {
      omega = {{0, half(1)}, {1, R(1)}, {2, half(-7)}, {3, R(2)}};  // (v)
    } else {
      omega = {{0, half(-1)}, {1, R(3)}, {2, half(-9)}, {3, R(2)}};  // (vi)
    }
  }
  return make_prediction(TheoremId::InverseOdd, q, std::move(cond), std::move(omega));
}

SpectrumPrediction predict_inverse_char2(const FieldContext& f, Elem c) {
  if (f.p() != 2) inapplicable("INV_CHAR2", "needs characteristic 2");
  if (c == f.zero() || c == f.one()) inapplicable("INV_CHAR2", "needs c outside {0, 1}");
  return predict_inverse_char2(f.n(), static_cast<int>(f.trace(c)),
                               static_cast<int>(f.trace(f.inv(c))));
}

SpectrumPrediction predict_inverse_odd(const FieldContext& f, Elem c) {
  if (f.p() == 2) inapplicable("INV_ODD", "needs odd characteristic");
  const Elem four = f.from_int(4);
  if (c == f.zero() || c == f.one() || c == four || c == f.inv(four)) {
    inapplicable("INV_ODD", "needs c outside {0, 1, 4, 1/4}");
  }
  const Elem c2_minus_4c = f.sub(f.mul(c, c), f.mul(four, c));
  const Elem one_minus_4c = f.sub(f.one(), f.mul(four, c));
  return predict_inverse_odd(f.q(), f.quad_char(c2_minus_4c), f.quad_char(one_minus_4c),
                             f.quad_char(c));
}

SpectrumPrediction predict_3n_plus3_half(unsigned n) {
  if (n < 2 || n % 2 != 0) inapplicable("P3_PLUS3_HALF", "needs n even and n >= 2");
  const std::int64_t q = pow3(n);
  const Ratio side = Ratio::of(q - 1, 2);
  return make_prediction(TheoremId::P3PlusThreeHalf, static_cast<std::uint64_t>(q),
                         {{"n", n}, {"n mod 2", n % 2}}, {{0, side}, {1, R(1)}, {2, side}});
}

SpectrumPrediction predict_3n_minus3(unsigned n) {
  if (n < 2) inapplicable("P3_MINUS3", "needs n >= 2");
  const std::int64_t q = pow3(n);
  std::map<unsigned, Ratio> omega;
  if (n % 4 == 0) {
    omega = {{0, Ratio::of(5 * q - 3, 8)},
             {1, R(1)},
             {2, Ratio::of(q + 3, 4)},
             {4, Ratio::of(q - 17, 8)},
             {6, R(1)}};
  } else if (n % 4 == 2) {
    omega = {{0, Ratio::of(5 * q - 13, 8)}, {1, R(1)}, {2, Ratio::of(q + 7, 4)}, {4, Ratio::of(q - 9, 8)}};
  } else {
    omega = {{0, Ratio::of(5 * q - 7, 8)}, {1, R(1)}, {2, Ratio::of(q + 1, 4)}, {4, Ratio::of(q - 3, 8)}};
  }
  return make_prediction(TheoremId::P3MinusThree, static_cast<std::uint64_t>(q),
                         {{"n", n}, {"n mod 4", n % 4}}, std::move(omega));
}

SpectrumPrediction predict_pk1_half(std::uint64_t p, unsigned n, unsigned k) {
  if (!is_prime(p) || p == 2) inapplicable("PK1_HALF", "needs an odd prime p");
  if (n == 0 || k == 0) inapplicable("PK1_HALF", "needs n, k >= 1");
  if (std::gcd(n, k) != 1) inapplicable("PK1_HALF", "needs gcd(n, k) = 1");
  if ((2 * n / std::gcd(2 * n, k)) % 2 != 0) inapplicable("PK1_HALF", "needs 2n/gcd(2n, k) even");
  const bool one_mod_4 = p % 4 == 1;
  if (!one_mod_4 && p <= 7) inapplicable("PK1_HALF_3MOD4", "needs p > 7");

  const auto P = static_cast<std::int64_t>(p);
  const auto q = static_cast<std::int64_t>(checked_pow(p, n));
  const bool n_odd = n % 2 == 1;
  Conditions cond{{"p mod 4", P % 4}, {"n", n}, {"k", k}, {"gcd(n,k)", std::gcd(n, k)}};
  std::map<unsigned, Ratio> omega;
  const auto top = static_cast<unsigned>((p + 1) / 2);
  if (one_mod_4) {
    const auto mid = static_cast<unsigned>((p + 3) / 4);
    if (n_odd) {
      omega = {{0, Ratio::of(static_cast<i128>(q + 1) * (P - 1), 2 * (P + 1))},
               {1, Ratio::of(q - 3, 2)},
               {mid, R(2)},
               {top, Ratio::of(q - P, P + 1)}};
    } else {
      omega = {{0, Ratio::of(static_cast<i128>(q - 1) * (P - 1), 2 * (P + 1))},
               {1, Ratio::of(q - 1, 2)},
               {mid, R(2)},
               {top, Ratio::of(q - P - 2, P + 1)}};
    }
    return make_prediction(TheoremId::PK1HalfOneMod4, static_cast<std::uint64_t>(q), std::move(cond),
                           std::move(omega));
  }
  const auto low = static_cast<unsigned>((p + 1) / 4);
  const auto high = static_cast<unsigned>((p + 5) / 4);
  if (n_odd) {
    omega = {{0, Ratio::of(static_cast<i128>(q) * (3 * P - 1) - (P + 5), 4 * (P + 1))},
             {2, Ratio::of(q - 3, 4)},
             {low, R(1)},
             {high, R(1)},
             {top, Ratio::of(q - P, P + 1)}};
  } else {
    omega = {{0, Ratio::of(static_cast<i128>(q - 1) * (3 * P - 1), 4 * (P + 1))},
             {2, Ratio::of(q - 1, 4)},
             {low, R(1)},
             {high, R(1)},
             {top, Ratio::of(q - P - 2, P + 1)}};
  }
  return make_prediction(TheoremId::PK1HalfThreeMod4, static_cast<std::uint64_t>(q), std::move(cond),
                         std::move(omega));
}

GammaValue gamma_5n_closed(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be >= 1");
  if (n > 60) throw Error(Errc::Overflow, "Gamma_{5,n} closed form limited to n <= 60");
  i128 sum = 0;
  i128 binom = 1;  // C(n, j), advanced one j at a time
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) binom = binom * (n - j + 1) / j;
    if (j % 2 != 0) continue;
    const unsigned k = j / 2;
    const i128 term = binom * (static_cast<i128>(1) << (2 * k + 1));
    sum += (k % 2 == 0) ? term : -term;
  }
  if (n % 2 == 0) sum = -sum;  // (-1)^(n+1)
  return GammaValue{n, narrow(sum)};
}

QuadrupleCount n4_closed_5n(unsigned n) {
  const auto q = static_cast<std::int64_t>(checked_pow(5, n));
  const std::int64_t gamma = gamma_5n_closed(n).value;
  const Ratio inner = Ratio::of(-gamma, 4) + Ratio::of(7 * q - 17, 4);
  const Ratio value = R(1) + R((n % 2 == 0 ? 4 : 2) * (q - 1)) + R(q - 1) * inner;
  if (!value.integral() || value.num < 0) {
    throw Error(Errc::Inapplicable, "N4 closed form is not a nonnegative integer: " + value.str());
  }
  return QuadrupleCount{static_cast<std::uint64_t>(value.num)};
}

SpectrumPrediction predict_5n_minus3_half(unsigned n) {
  if (n == 0) inapplicable("P5_MINUS3_HALF", "needs n >= 1");
  const auto q = static_cast<std::int64_t>(checked_pow(5, n));
  const std::int64_t gamma = gamma_5n_closed(n).value;
  const std::int64_t shift = n % 2 == 0 ? 5 : 13;
  const Ratio side = Ratio::of(-gamma, 8) + Ratio::of(3 * q - shift, 8);
  const Ratio middle = Ratio::of(gamma, 4) + Ratio::of(q + shift, 4);
  return make_prediction(TheoremId::P5MinusThreeHalf, static_cast<std::uint64_t>(q),
                         {{"n", n}, {"n mod 2", n % 2}, {"Gamma_5n", gamma}},
                         {{0, side}, {1, middle}, {2, side}});
}

std::vector<Applicable> dispatch(const FieldContext& f, std::uint64_t d, Elem c) {
  std::vector<Applicable> out;
  const std::uint64_t q = f.q();
  const std::uint64_t p = f.p();
  const unsigned n = f.n();
  if (q < 3) return out;
  const std::uint64_t dn = normalize_exponent(d, q);
  auto same_exponent = [&](std::uint64_t formula) { return formula != 0 && normalize_exponent(formula, q) == dn; };
  const bool c_is_minus_one = c == f.minus_one();
  const std::int64_t e = static_cast<std::int64_t>(std::gcd(dn, q - 1));

  if (same_exponent(q - 2)) {
    if (p == 2 && c != f.zero() && c != f.one()) {
      out.push_back({TheoremId::InverseChar2,
                     {{"Tr(c)", f.trace(c)}, {"Tr(1/c)", f.trace(f.inv(c))}, {"gcd(d,q-1)", e}}});
    }
    if (p != 2) {
      const Elem four = f.from_int(4);
      if (c != f.zero() && c != f.one() && c != four && c != f.inv(four)) {
        const Elem c2_minus_4c = f.sub(f.mul(c, c), f.mul(four, c));
        const Elem one_minus_4c = f.sub(f.one(), f.mul(four, c));
        out.push_back({TheoremId::InverseOdd,
                       {{"chi(c^2-4c)", f.quad_char(c2_minus_4c)},
                        {"chi(1-4c)", f.quad_char(one_minus_4c)},
                        {"chi(c)", f.quad_char(c)}}});
      }
    }
  }
  if (!c_is_minus_one || p == 2) return out;

  if (p == 3 && n % 2 == 0 && same_exponent((q + 3) / 2)) {
    out.push_back({TheoremId::P3PlusThreeHalf, {{"c", -1}, {"n mod 2", 0}}});
  }
  if (p == 3 && n >= 2 && same_exponent(q - 3)) {
    out.push_back({TheoremId::P3MinusThree, {{"c", -1}, {"n mod 4", n % 4}}});
  }
  if (p % 4 == 1 || p > 7) {
    // (p^k + 1)/2 mod (q - 1) only depends on p^k mod 2(q - 1), so the
    // residues repeat with period dividing 2n.
    for (unsigned k = 1; k <= 2 * n; ++k) {
      if (std::gcd(n, k) != 1 || (2 * n / std::gcd(2 * n, k)) % 2 != 0) continue;
      const std::uint64_t r = pow_mod(p, k, 2 * (q - 1));
      if (!same_exponent((r + 1) / 2)) continue;
      const TheoremId id = p % 4 == 1 ? TheoremId::PK1HalfOneMod4 : TheoremId::PK1HalfThreeMod4;
      out.push_back({id, {{"c", -1}, {"k", k}, {"gcd(n,k)", 1}, {"p mod 4", p % 4}}, k});
      break;
    }
  }
  if (p == 5 && same_exponent((q - 3) / 2)) {
    out.push_back({TheoremId::P5MinusThreeHalf, {{"c", -1}, {"n mod 2", n % 2}}});
  }
  return out;
}

SpectrumPrediction predict(const FieldContext& f, Elem c, const Applicable& row) {
  SpectrumPrediction pred;
  switch (row.theorem) {
    case TheoremId::InverseChar2: pred = predict_inverse_char2(f, c); break;
    case TheoremId::InverseOdd: pred = predict_inverse_odd(f, c); break;
    case TheoremId::P3PlusThreeHalf: pred = predict_3n_plus3_half(f.n()); break;
    case TheoremId::P3MinusThree: pred = predict_3n_minus3(f.n()); break;
    case TheoremId::PK1HalfOneMod4:
    case TheoremId::PK1HalfThreeMod4: pred = predict_pk1_half(f.p(), f.n(), row.k); break;
    case TheoremId::P5MinusThreeHalf: pred = predict_5n_minus3_half(f.n()); break;
  }
  pred.conditions = row.conditions;
  return pred;
}

std::vector<SpectrumPrediction> predict_all(const FieldContext& f, std::uint64_t d, Elem c) {
  std::vector<SpectrumPrediction> out;
  for (const auto& row : dispatch(f, d, c)) out.push_back(predict(f, c, row));
  return out;
}

}  // namespace cdiff
