#include "cdiff/character_sums.hpp"

#include "cdiff/error.hpp"

namespace cdiff {

namespace {

void require_odd(const FieldContext& f) {
  if (f.p() == 2) throw Error(Errc::CharTwoUnsupported, "operation needs odd characteristic");
}

}  // namespace

unsigned quadratic_solution_count(const FieldContext& f, Elem a, Elem b) {
  if (f.p() == 2) {
    if (a == f.zero()) return 1;
    const Elem t = f.div(b, f.mul(a, a));
    return f.trace(t) == 0 ? 2 : 0;
  }
  const Elem disc = f.sub(f.mul(a, a), f.mul(f.from_int(4), b));
  switch (f.quad_char(disc)) {
    case 1: return 2;
    case 0: return 1;
    default: return 0;
  }
}

std::int64_t char_sum_quadratic(const FieldContext& f, Elem a2, Elem a1, Elem a0) {
  require_odd(f);
  if (a2 == f.zero()) throw Error(Errc::LeadingCoeffZero, "leading coefficient must be nonzero");
  const Elem disc = f.sub(f.mul(a1, a1), f.mul(f.from_int(4), f.mul(a0, a2)));
  const std::int64_t chi_lead = f.quad_char(a2);
  if (disc != f.zero()) return -chi_lead;
  return (static_cast<std::int64_t>(f.q()) - 1) * chi_lead;
}

std::int64_t gamma_5n_direct(const FieldContext& f) {
  if (f.p() != 5) throw Error(Errc::WrongCharacteristic, "Gamma_{5,n} is defined over GF(5^n)");
  std::int64_t sum = 0;
  for (std::uint32_t v = 0; v < f.q(); ++v) {
    const Elem x{v};
    const Elem cubic = f.mul(x, f.mul(f.sub(x, f.one()), f.add(x, f.one())));
    sum += f.quad_char(cubic);
  }
  return sum;
}

ChiPartition partition_by_chi(const FieldContext& f) {
  require_odd(f);
  ChiPartition part;
  const Elem minus_one = f.minus_one();
  for (std::uint32_t v = 1; v < f.q(); ++v) {
    const Elem x{v};
    if (x == minus_one) continue;
    const int cx = f.quad_char(x);
    const int cx1 = f.quad_char(f.add(x, f.one()));
    if (cx == 1) {
      (cx1 == 1 ? part.plus_plus : part.plus_minus) += 1;
    } else {
      (cx1 == 1 ? part.minus_plus : part.minus_minus) += 1;
    }
  }
  return part;
}

}  // namespace cdiff
