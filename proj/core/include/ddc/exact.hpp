#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "ddc/error.hpp"

namespace ddc {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Narrowing with a loud failure instead of silent wraparound.
Int to_int64(const BigInt& v);

BigInt binomial(Int n, Int r);

// Quotient that insists on exact division. Used wherever an integer valued
// rational expression (a polynomial over a fixed denominator) is evaluated.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Integer coefficient polynomial divided by a positive constant, e.g.
// (2k^4+4k^3+10k^2+8k+3)/3. Evaluation checks divisibility; str() renders the
// conventional form used in tables.
struct RatPoly {
  std::vector<Int> coeffs;  // descending degree, coeffs.front() is the lead
  Int divisor = 1;
  std::string var = "k";

  BigInt eval_big(Int x) const;
  Int eval(Int x) const { return to_int64(eval_big(x)); }
  std::string str() const;
};

}  // namespace ddc
