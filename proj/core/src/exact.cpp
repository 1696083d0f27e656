#include "ddc/exact.hpp"

#include <limits>

namespace ddc {

Int to_int64(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    fail(errc::too_large, "value " + v.str() + " does not fit in 64 bits");
  return static_cast<Int>(v);
}

BigInt binomial(Int n, Int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (Int i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // exact at every step: acc is C(n-r+i, i)
  }
  return acc;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(errc::invariant_violated, "division by zero");
  if (num % den != 0)
    fail(errc::invariant_violated, num.str() + " not divisible by " + den.str());
  return num / den;
}

BigInt RatPoly::eval_big(Int x) const {
  BigInt acc = 0;
  for (Int c : coeffs) acc = acc * x + c;
  return exact_div(acc, divisor);
}

std::string RatPoly::str() const {
  std::string body;
  const Int deg = static_cast<Int>(coeffs.size()) - 1;
  for (Int i = 0; i <= deg; ++i) {
    Int c = coeffs[static_cast<size_t>(i)];
    if (c == 0) continue;
    Int p = deg - i;
    if (body.empty()) {
      if (c < 0) body += "-";
    } else {
      body += c < 0 ? "-" : "+";
    }
    Int a = c < 0 ? -c : c;
    if (a != 1 || p == 0) body += std::to_string(a);
    if (p >= 1) body += var;
    if (p >= 2) body += "^" + std::to_string(p);
  }
  if (body.empty()) body = "0";
  if (divisor == 1) return body;
  return "(" + body + ")/" + std::to_string(divisor);
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::zero_residue: return "ZeroResidue";
    case errc::duplicate_generator: return "DuplicateGenerator";
    case errc::disconnected: return "Disconnected";
    case errc::invalid_dimension: return "InvalidDimension";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::diameter_too_small: return "DiameterTooSmall";
    case errc::diameter_below_threshold: return "DiameterBelowThreshold";
    case errc::residue_class_unavailable: return "ResidueClassUnavailable";
    case errc::too_large: return "TooLarge";
    case errc::not_a_unit: return "NotAUnit";
    case errc::unstable_classification: return "UnstableClassification";
    case errc::verification_failed: return "VerificationFailed";
    case errc::invariant_violated: return "InvariantViolated";
    case errc::methods_disagree: return "MethodsDisagree";
    case errc::ceiling_below_known_witness: return "CeilingBelowKnownWitness";
    case errc::bad_parameter: return "BadParameter";
  }
  return "UnknownError";
}

}  // namespace ddc
