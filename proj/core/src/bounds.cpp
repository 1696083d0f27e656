#include "ddc/bounds.hpp"

#include <array>

namespace ddc {

namespace {

BigInt sphere_closed_form(Int f, Int k) {
  BigInt total = 0;
  BigInt pow2 = 1;
  for (Int i = 0; i <= f; ++i) {
    total += pow2 * binomial(f, i) * binomial(k, i);
    pow2 *= 2;
  }
  return total;
}

BigInt sphere_recurrence(Int f, Int k) {
  // S(f,k) = S(f,k-1) + S(f-1,k) + S(f-1,k-1), rolled one dimension at a time.
  std::vector<BigInt> row(static_cast<size_t>(k) + 1);
  for (Int j = 0; j <= k; ++j) row[static_cast<size_t>(j)] = 2 * j + 1;
  for (Int i = 2; i <= f; ++i) {
    BigInt prev_here = 1;  // S(i, 0)
    for (Int j = 1; j <= k; ++j) {
      BigInt cur = prev_here + row[static_cast<size_t>(j)] + row[static_cast<size_t>(j) - 1];
      row[static_cast<size_t>(j) - 1] = prev_here;
      prev_here = cur;
    }
    row[static_cast<size_t>(k)] = prev_here;
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace

BigInt lee_sphere_size(Int f, Int k) {
  if (f < 1) fail(errc::invalid_dimension, "dimension " + std::to_string(f));
  if (k < 0) fail(errc::bad_parameter, "negative radius " + std::to_string(k));
  BigInt closed = sphere_closed_form(f, k);
  if (k >= 1) {
    BigInt rec = sphere_recurrence(f, k);
    if (rec != closed)
      fail(errc::methods_disagree, "sphere size routes differ at f=" + std::to_string(f) +
                                       " k=" + std::to_string(k) + ": " + rec.str() +
                                       " vs " + closed.str());
  }
  return closed;
}

BigInt mac_upper_bound(Int d, Int k) {
  if (d < 2) fail(errc::unsupported_degree, "degree " + std::to_string(d));
  if (k < 1) fail(errc::bad_parameter, "diameter " + std::to_string(k));
  if (d % 2 == 0) return lee_sphere_size(d / 2, k);
  Int f = (d - 1) / 2;
  return lee_sphere_size(f, k) + lee_sphere_size(f, k - 1);
}

const RatPoly& mac_polynomial(Int d) {
  static const std::array<RatPoly, 8> polys = {{
      {{2, 1}, 1},
      {{4, 0}, 1},
      {{2, 2, 1}, 1},
      {{4, 0, 2}, 1},
      {{4, 6, 8, 3}, 3},
      {{8, 0, 16, 0}, 3},
      {{2, 4, 10, 8, 3}, 3},
      {{4, 0, 20, 0, 6}, 3},
  }};
  if (d < 2 || d > 9)
    fail(errc::unsupported_degree, "no closed polynomial for degree " + std::to_string(d));
  return polys[static_cast<size_t>(d - 2)];
}

CjWitness cj_lower_bound(Int d, Int k) {
  if (d < 6 || d % 2 != 0)
    fail(errc::unsupported_degree,
         "constructive bound needs even degree >= 6, got " + std::to_string(d));
  Int f = d / 2;
  if (k < f)
    fail(errc::diameter_too_small,
         "diameter " + std::to_string(k) + " below dimension " + std::to_string(f));
  CjWitness w;
  w.degree = d;
  w.diameter = k;
  w.a = (k - f + 3) / f;
  if (w.a < 1)
    fail(errc::diameter_too_small, "radix floor((k-f+3)/f) vanishes at k=" + std::to_string(k) +
                                       ", f=" + std::to_string(f));
  BigInt base = 4 * BigInt(w.a);
  BigInt order = 0;
  BigInt pw = 1;
  std::vector<Int> gens;
  for (Int i = 0; i < f; ++i) {
    order += pw;
    gens.push_back(to_int64(pw));
    pw *= base;
  }
  order *= 2 * w.a;
  w.order = to_int64(order);
  w.gens = make_generator_set(w.order, gens);
  return w;
}

const RatPoly& cj_residue_polynomial(Int d, Int residue) {
  static const std::array<RatPoly, 3> deg6 = {{
      {{32, 24, 18, 0}, 27},
      {{32, -72, 66, -26}, 27},
      {{32, -168, 306, -196}, 27},
  }};
  static const std::array<RatPoly, 4> deg8 = {{
      {{1, -15, 85, -215, 204}, 2},
      {{1, -3, 4, -2, 0}, 2},
      {{1, -7, 19, -23, 10}, 2},
      {{1, -11, 46, -86, 60}, 2},
  }};
  if (d == 6 && residue >= 0 && residue < 3) return deg6[static_cast<size_t>(residue)];
  if (d == 8 && residue >= 0 && residue < 4) return deg8[static_cast<size_t>(residue)];
  fail(errc::bad_parameter, "no residue expansion for degree " + std::to_string(d) +
                                " residue " + std::to_string(residue));
}

std::pair<BigRat, BigRat> predicted_leading_terms(Int d) {
  if (d < 2) fail(errc::unsupported_degree, "degree " + std::to_string(d));
  auto pow_rat = [](const BigRat& b, Int e) {
    BigRat r = 1;
    for (Int i = 0; i < e; ++i) r *= b;
    return r;
  };
  if (d % 2 == 0) {
    Int f = d / 2;
    BigRat base = BigRat(4, f);
    return {pow_rat(base, f) / 2, pow_rat(base, f - 1)};
  }
  Int f = (d - 1) / 2;
  return {pow_rat(BigRat(4, f), f), BigRat(0)};
}

}  // namespace ddc
