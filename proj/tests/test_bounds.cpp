#include <vector>

#include "ddc/bounds.hpp"
#include "ddc/error.hpp"
#include "ddc/graph.hpp"
#include "doctest.h"

using namespace ddc;

namespace {

// Independent oracle: count points of Z^f with l1 norm at most k by direct
// convolution over coordinates, nothing shared with the library routes.
BigInt lee_ball_dp(int f, int k) {
  std::vector<BigInt> exact(k + 1, 0);  // points with norm exactly s
  exact[0] = 1;
  for (int dim = 0; dim < f; ++dim) {
    std::vector<BigInt> next(k + 1, 0);
    for (int s = 0; s <= k; ++s) {
      if (exact[s] == 0) continue;
      next[s] += exact[s];                                    // coordinate 0
      for (int t = 1; s + t <= k; ++t) next[s + t] += 2 * exact[s];  // +-t
    }
    exact = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& e : exact) total += e;
  return total;
}

}  // namespace

TEST_CASE("sphere size equals the convolution oracle") {
  for (int f = 1; f <= 8; ++f)
    for (int k = 0; k <= 200; k += (k < 20 ? 1 : 7))
      CHECK(lee_sphere_size(f, k) == lee_ball_dp(f, k));
}

TEST_CASE("sphere size spot values") {
  CHECK(lee_sphere_size(1, 5) == 11);
  CHECK(lee_sphere_size(2, 2) == 13);
  CHECK(lee_sphere_size(4, 2) == 41);
  CHECK_THROWS_AS(lee_sphere_size(0, 7), error);
}

TEST_CASE("upper bound polynomials, degrees 2 through 9") {
  const char* expected[] = {
      "2k+1",
      "4k",
      "2k^2+2k+1",
      "4k^2+2",
      "(4k^3+6k^2+8k+3)/3",
      "(8k^3+16k)/3",
      "(2k^4+4k^3+10k^2+8k+3)/3",
      "(4k^4+20k^2+6)/3",
  };
  for (Int d = 2; d <= 9; ++d) {
    CHECK(mac_polynomial(d).str() == expected[d - 2]);
    for (Int k = 1; k <= 60; ++k)
      CHECK(mac_upper_bound(d, k) == mac_polynomial(d).eval_big(k));
  }
  CHECK_THROWS_AS(mac_polynomial(10), error);
  CHECK_THROWS_AS(mac_upper_bound(1, 5), error);
}

TEST_CASE("upper bound is the sphere (even) or sphere pair (odd)") {
  for (Int k = 1; k <= 40; ++k) {
    CHECK(mac_upper_bound(6, k) == lee_ball_dp(3, k));
    CHECK(mac_upper_bound(7, k) == lee_ball_dp(3, k) + lee_ball_dp(3, k - 1));
    CHECK(mac_upper_bound(8, k) == lee_ball_dp(4, k));
    CHECK(mac_upper_bound(9, k) == lee_ball_dp(4, k) + lee_ball_dp(4, k - 1));
  }
}

TEST_CASE("constructive lower bound matches its residue polynomials") {
  for (Int k = 3; k <= 40; ++k)
    CHECK(cj_lower_bound(6, k).order == cj_residue_polynomial(6, k % 3).eval(k));
  for (Int k = 5; k <= 40; ++k)
    CHECK(cj_lower_bound(8, k).order == cj_residue_polynomial(8, k % 4).eval(k));
  CHECK_THROWS_AS(cj_residue_polynomial(7, 0), error);
  CHECK_THROWS_AS(cj_residue_polynomial(6, 3), error);
}

TEST_CASE("lower bound witness graphs meet their diameter") {
  for (Int d : {6, 8}) {
    Int f = d / 2;
    for (Int k = f; k <= 20; ++k) {
      CjWitness w;
      try {
        w = cj_lower_bound(d, k);
      } catch (const error& e) {
        CHECK(e.code() == errc::diameter_too_small);  // radix floor vanished
        continue;
      }
      CHECK(w.order == w.gens.n);
      CHECK(w.gens.degree() == d);
      CHECK(diameter(make_graph(w.gens)) <= k);
    }
  }
}

TEST_CASE("lower bound rejects degenerate parameters") {
  CHECK_THROWS_AS(cj_lower_bound(8, 4), error);   // radix floor is zero
  CHECK_THROWS_AS(cj_lower_bound(7, 10), error);  // odd degree
  CHECK_THROWS_AS(cj_lower_bound(4, 10), error);  // dimension below 3
}

TEST_CASE("leading terms of the order formulas") {
  using Pair = std::pair<BigRat, BigRat>;
  CHECK(predicted_leading_terms(2) == Pair{2, 1});
  CHECK(predicted_leading_terms(3) == Pair{4, 0});
  CHECK(predicted_leading_terms(4) == Pair{2, 2});
  CHECK(predicted_leading_terms(5) == Pair{4, 0});
  CHECK(predicted_leading_terms(6) == Pair{BigRat(32, 27), BigRat(16, 9)});
  CHECK(predicted_leading_terms(7) == Pair{BigRat(64, 27), 0});
  CHECK(predicted_leading_terms(8) == Pair{BigRat(1, 2), 1});
  CHECK(predicted_leading_terms(9) == Pair{1, 0});
}
