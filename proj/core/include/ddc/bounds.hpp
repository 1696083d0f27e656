#pragma once

#include <utility>

#include "ddc/exact.hpp"
#include "ddc/graph.hpp"

namespace ddc {

// Number of points of Z^f with l1 norm at most k. Computed independently by
// the two-term recurrence and by the binomial closed form; any disagreement
// is a hard error, so a passing call certifies both routes.
BigInt lee_sphere_size(Int f, Int k);

// Sphere upper bound on the order of an Abelian Cayley graph of degree d and
// diameter k. Even d: lee_sphere_size(d/2, k); odd d: the sum of two
// consecutive spheres in dimension (d-1)/2.
BigInt mac_upper_bound(Int d, Int k);

// The closed polynomial form of mac_upper_bound for 2 <= d <= 9.
const RatPoly& mac_polynomial(Int d);

// Closed form of the constructive lower bound on its residue classes:
// degree 6 splits mod 3, degree 8 splits mod 4. Valid once the radix
// floor((k-f+3)/f) is positive, i.e. k >= 3 for degree 6, k >= 5 for degree 8.
const RatPoly& cj_residue_polynomial(Int d, Int residue);

struct CjWitness {
  Int degree = 0;
  Int diameter = 0;
  Int a = 0;          // radix floor((k-f+3)/f)
  Int order = 0;      // 2a * sum_{i<f} (4a)^i
  GeneratorSet gens;  // {1, 4a, (4a)^2, ...}
};

// Constructive lower bound for even degree d = 2f, f >= 3, k >= f.
// The witness graph is returned alongside the order so callers can verify it.
CjWitness cj_lower_bound(Int d, Int k);

// Leading and second coefficients of the largest known order as a polynomial
// in k, as exact rationals. Even d = 2f: ((1/2)(4/f)^f, (4/f)^(f-1));
// odd d = 2f+1: ((4/f)^f, 0).
std::pair<BigRat, BigRat> predicted_leading_terms(Int d);

}  // namespace ddc
