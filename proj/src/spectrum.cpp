#include "cdiff/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "cdiff/error.hpp"

namespace cdiff {

std::uint64_t normalize_exponent(std::uint64_t d, std::uint64_t q) {
  if (d == 0) throw Error(Errc::InvalidArgument, "exponent d must be >= 1");
  const std::uint64_t order = q - 1;
  const std::uint64_t r = d % order;
  return r == 0 ? order : r;
}

PowerMap make_power_map(const FieldContext& f, std::uint64_t d, Elem c) {
  if (c.v >= f.q()) throw Error(Errc::InvalidArgument, "c is not an element of the field");
  return PowerMap{normalize_exponent(d, f.q()), c};
}

std::vector<std::uint32_t> power_table(const FieldContext& f, std::uint64_t d) {
  std::vector<std::uint32_t> table(f.q());
  for (std::uint32_t v = 0; v < f.q(); ++v) table[v] = f.pow(Elem{v}, d).v;
  return table;
}

std::vector<std::uint32_t> delta_histogram(const FieldContext& f, const PowerMap& map) {
  const auto pw = power_table(f, map.d);
  std::vector<std::uint32_t> hist(f.q(), 0);
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const std::uint32_t scaled = f.mul(map.c, Elem{pw[x]}).v;
    hist[f.sub_raw(pw[f.inc_raw(x)], scaled)] += 1;
  }
  return hist;
}

std::uint64_t c_delta(const FieldContext& f, const PowerMap& map, Elem b) {
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    const Elem lhs = f.pow(Elem{f.inc_raw(x)}, map.d);
    const Elem rhs = f.mul(map.c, f.pow(Elem{x}, map.d));
    if (f.sub(lhs, rhs) == b) ++count;
  }
  return count;
}

std::uint64_t c_ddt_entry(const FieldContext& f, const PowerMap& map, Elem a, Elem b) {
  if (a != f.zero()) return c_delta(f, map, f.div(b, f.pow(a, map.d)));
  const Elem factor = f.sub(f.one(), map.c);
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    if (f.mul(factor, f.pow(Elem{x}, map.d)) == b) ++count;
  }
  return count;
}

CDiffSpectrum spectrum_from_histogram(std::uint64_t q, std::uint64_t d, Elem c,
                                      std::span<const std::uint32_t> histogram) {
  CDiffSpectrum s;
  s.q = q;
  s.d = d;
  s.c = c;
  s.omega[0] = 0;
  for (auto count : histogram) s.omega[count] += 1;
  for (const auto& [i, w] : s.omega) {
    if (w > 0) s.uniformity = std::max(s.uniformity, i);
  }
  return s;
}

CDiffSpectrum c_spectrum(const FieldContext& f, const PowerMap& map) {
  const auto hist = delta_histogram(f, map);
  return spectrum_from_histogram(f.q(), map.d, map.c, hist);
}

std::string to_string(CClass cls) {
  switch (cls) {
    case CClass::PcN: return "PcN";
    case CClass::APcN: return "APcN";
    case CClass::Uniform: return "uniform";
  }
  return "uniform";
}

CUniformity c_uniformity(const FieldContext& f, const PowerMap& map, const CDiffSpectrum& spectrum) {
  CUniformity u;
  u.spectrum_max = spectrum.uniformity;
  if (map.c != f.one()) {
    const Elem factor = f.sub(f.one(), map.c);
    std::vector<std::uint32_t> row(f.q(), 0);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
      row[f.mul(factor, f.pow(Elem{x}, map.d)).v] += 1;
    }
    u.zero_row_max = *std::max_element(row.begin(), row.end());
  }
  u.value = std::max(u.spectrum_max, u.zero_row_max);
  u.cls = u.value == 1 ? CClass::PcN : (u.value == 2 ? CClass::APcN : CClass::Uniform);
  return u;
}

CUniformity c_uniformity(const FieldContext& f, const PowerMap& map) {
  return c_uniformity(f, map, c_spectrum(f, map));
}

namespace {

// Counts solutions with x1 in [begin, end). x4 is forced to t + x3 with
// t = x1 - x2, and the second equation reads
// x4^d = (x1^d - c x2^d) + c x3^d.
template <typename AddFn>
std::uint64_t n4_slice(std::uint32_t q, std::uint32_t begin, std::uint32_t end,
                       const std::vector<std::uint32_t>& pw, const std::vector<std::uint32_t>& cpw,
                       const std::vector<std::uint32_t>& neg, AddFn add) {
  std::uint64_t count = 0;
  for (std::uint32_t x1 = begin; x1 < end; ++x1) {
    for (std::uint32_t x2 = 0; x2 < q; ++x2) {
      const std::uint32_t t = add(x1, neg[x2]);
      const std::uint32_t lhs = add(pw[x1], neg[cpw[x2]]);
      for (std::uint32_t x3 = 0; x3 < q; ++x3) {
        count += pw[add(t, x3)] == add(lhs, cpw[x3]);
      }
    }
  }
  return count;
}

template <typename AddFn>
std::uint64_t n4_parallel(std::uint32_t q, const std::vector<std::uint32_t>& pw,
                          const std::vector<std::uint32_t>& cpw,
                          const std::vector<std::uint32_t>& neg, AddFn add) {
  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, q);
  if (workers == 1) return n4_slice(q, 0, q, pw, cpw, neg, add);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint32_t begin = static_cast<std::uint32_t>(std::uint64_t{q} * w / workers);
    const std::uint32_t end = static_cast<std::uint32_t>(std::uint64_t{q} * (w + 1) / workers);
    threads.emplace_back([&, w, begin, end] { partial[w] = n4_slice(q, begin, end, pw, cpw, neg, add); });
  }
  for (auto& t : threads) t.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace

QuadrupleCount n4_bruteforce(const FieldContext& f, const PowerMap& map, std::uint64_t budget_q) {
  if (f.q() > budget_q) {
    throw Error(Errc::BudgetExceeded, "N4 enumeration needs q <= " + std::to_string(budget_q) +
                                          " (q = " + std::to_string(f.q()) + ")");
  }
  const std::uint32_t q = f.q();
  const auto pw = power_table(f, map.d);
  std::vector<std::uint32_t> cpw(q);
  std::vector<std::uint32_t> neg(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    cpw[x] = f.mul(map.c, Elem{pw[x]}).v;
    neg[x] = f.neg_raw(x);
  }

  if (f.p() == 2) {
    return {n4_parallel(q, pw, cpw, neg, [](std::uint32_t a, std::uint32_t b) { return a ^ b; })};
  }
  constexpr std::uint32_t kAddTableMaxQ = 2048;
  if (q <= kAddTableMaxQ) {
    std::vector<std::uint32_t> table(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) table[std::size_t{a} * q + b] = f.add_raw(a, b);
    }
    const std::uint32_t* add_table = table.data();
    return {n4_parallel(q, pw, cpw, neg, [add_table, q](std::uint32_t a, std::uint32_t b) {
      return add_table[std::size_t{a} * q + b];
    })};
  }
  return {n4_parallel(q, pw, cpw, neg, [&f](std::uint32_t a, std::uint32_t b) { return f.add_raw(a, b); })};
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Passed: return "PASSED";
    case CheckStatus::Failed: return "FAILED";
    case CheckStatus::Skipped: return "SKIPPED";
    case CheckStatus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "SKIPPED";
}

IdentityReport check_identities(const CDiffSpectrum& spectrum, std::optional<QuadrupleCount> n4) {
  IdentityReport r;
  for (const auto& [i, w] : spectrum.omega) {
    r.sum_omega += w;
    r.sum_i_omega += std::uint64_t{i} * w;
    r.sum_i2_omega += std::uint64_t{i} * i * w;
  }
  const std::uint64_t q = spectrum.q;
  r.eq1_count = r.sum_omega == q;
  r.eq1_weighted = r.sum_i_omega == q;
  if (!r.eq1_count) {
    r.violations.push_back("sum omega_i = " + std::to_string(r.sum_omega) + ", expected " + std::to_string(q));
  }
  if (!r.eq1_weighted) {
    r.violations.push_back("sum i*omega_i = " + std::to_string(r.sum_i_omega) + ", expected " +
                           std::to_string(q));
  }
  r.gcd_term = std::gcd(spectrum.d, q - 1);

  if (spectrum.c.v == 1) {
    r.eq2 = CheckStatus::NotApplicable;
    return r;
  }
  if (!n4) {
    r.eq2 = CheckStatus::Skipped;
    return r;
  }
  r.n4 = n4->value;
  const std::uint64_t order = q - 1;
  if (n4->value == 0 || (n4->value - 1) % order != 0) {
    r.eq2 = CheckStatus::Failed;
    r.violations.push_back("N4 - 1 = " + std::to_string(n4->value - 1) + " is not divisible by q - 1");
    return r;
  }
  const std::uint64_t ratio = (n4->value - 1) / order;
  if (ratio >= r.gcd_term && ratio - r.gcd_term == r.sum_i2_omega) {
    r.eq2 = CheckStatus::Passed;
  } else {
    r.eq2 = CheckStatus::Failed;
    r.violations.push_back("sum i^2*omega_i = " + std::to_string(r.sum_i2_omega) +
                           ", but (N4 - 1)/(q - 1) - gcd(d, q - 1) = " + std::to_string(ratio) + " - " +
                           std::to_string(r.gcd_term));
  }
  return r;
}

}  // namespace cdiff
