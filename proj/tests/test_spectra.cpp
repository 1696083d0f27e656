#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "ddc/error.hpp"
#include "ddc/families.hpp"
#include "ddc/graph.hpp"
#include "ddc/spectra.hpp"
#include "doctest.h"

#ifdef DDC_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace ddc;

namespace {

std::vector<double> sorted_eigs(const CirculantGraph& g, Int max_order = 50'000) {
  SpectrumOptions so;
  so.max_order = max_order;
  auto s = spectrum(g, so);
  std::sort(s.eig.begin(), s.eig.end());
  return s.eig;
}

#ifdef DDC_HAVE_EIGEN
// Independent oracle: dense symmetric eigensolver on the explicit adjacency
// matrix.
std::vector<double> eigen_oracle(Int n, const std::vector<Int>& gens) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Int v = 0; v < n; ++v)
    for (Int g : gens) {
      a(v, (v + g) % n) += 1.0;
      a(v, ((v - g) % n + n) % n) += 1.0;
    }
  for (Int v = 0; v < n; ++v)
    for (Int g : gens)
      if (2 * g == n) a(v, (v + g) % n) -= 1.0;  // self-inverse: one edge, not two
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}
#endif

}  // namespace

TEST_CASE("spectrum on analytic cases") {
  // K_4 = X(Z_4, {1, 2}): eigenvalues 3, -1, -1, -1.
  auto k4 = sorted_eigs(make_graph(4, std::vector<Int>{1, 2}));
  CHECK(k4[3] == doctest::Approx(3.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) CHECK(k4[i] == doctest::Approx(-1.0).epsilon(1e-12));

  // Cycle C_n: eigenvalues 2 cos(2 pi l / n).
  Int n = 17;
  auto cyc = sorted_eigs(make_graph(n, std::vector<Int>{1}));
  std::vector<double> expect;
  for (Int l = 1; l <= n; ++l) expect.push_back(2 * std::cos(2 * M_PI * l / double(n)));
  std::sort(expect.begin(), expect.end());
  for (Int i = 0; i < n; ++i) CHECK(cyc[i] == doctest::Approx(expect[i]).epsilon(1e-10));

  // The trivial character always contributes the degree.
  auto g = make_graph(42, std::vector<Int>{1, 5, 14, 17, 21});
  auto s = spectrum(g);
  CHECK(s.eig[41] == doctest::Approx(9.0).epsilon(1e-12));
}

#ifdef DDC_HAVE_EIGEN
TEST_CASE("spectrum matches a dense eigensolver") {
  std::vector<std::pair<Int, std::vector<Int>>> cases = {
      {13, {1, 5}},
      {35, {1, 6, 7, 10}},
      {42, {1, 5, 14, 17, 21}},
      {104, {1, 16, 20, 27}},
      {700, {1, 5, 197, 223, 350}},
  };
  for (const auto& [n, gens] : cases) {
    auto got = sorted_eigs(make_graph(n, gens));
    auto want = eigen_oracle(n, gens);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i)
      CHECK(std::abs(got[i] - want[i]) < 1e-8 * std::max(1.0, std::abs(want[i])));
  }
}
#endif

TEST_CASE("inertia separates the two degree-9 classes") {
  auto inert = [](Int n, std::vector<Int> gens) {
    return inertia(spectrum(make_graph(n, gens)));
  };
  CHECK(inert(700, {1, 5, 197, 223, 350}) == Inertia{315, 0, 385});
  CHECK(inert(700, {1, 45, 225, 231, 350}) == Inertia{319, 0, 381});
  CHECK(inert(2548, {1, 7, 521, 571, 1274}) == Inertia{1215, 0, 1333});
  CHECK(inert(2548, {1, 581, 1021, 1029, 1274}) == Inertia{1211, 0, 1337});
}

TEST_CASE("inertia counts every eigenvalue") {
  std::mt19937 rng(404);
  for (int i = 0; i < 10; ++i) {
    Int n = 10 + static_cast<Int>(rng() % 500);
    std::vector<Int> gens{1, 2 + static_cast<Int>(rng() % (n / 2 - 1))};
    if (gens[1] == 1) continue;
    auto in = inertia(spectrum(make_graph(n, gens)));
    CHECK(in.positive + in.zero + in.negative == n);
    CHECK(in.positive >= 1);  // the trivial character
  }

  // C_4 has spectrum {2, 0, -2, 0}.
  auto c4 = inertia(spectrum(make_graph(4, std::vector<Int>{1})));
  CHECK(c4 == Inertia{1, 2, 1});
}

TEST_CASE("spectrum is invariant under multipliers") {
  std::mt19937 rng(2718);
  int done = 0;
  while (done < 20) {
    Int n = 10 + static_cast<Int>(rng() % 1990);
    std::set<Int> pick;
    int f = 2 + static_cast<int>(rng() % 3);
    for (int t = 0; t < 50 && static_cast<int>(pick.size()) < f; ++t)
      pick.insert(1 + static_cast<Int>(rng() % (n / 2)));
    std::vector<Int> gens(pick.begin(), pick.end());
    Int g0 = n;
    for (Int x : gens) g0 = std::gcd(g0, x);
    if (g0 != 1) continue;

    Int u = 0;
    for (int t = 0; t < 100; ++t) {
      Int c = 2 + static_cast<Int>(rng() % (n - 2));
      if (std::gcd(c, n) == 1) {
        u = c;
        break;
      }
    }
    if (u == 0) continue;

    auto s = make_generator_set(n, gens);
    auto a = sorted_eigs(make_graph(s));
    auto b = sorted_eigs(make_graph(apply_multiplier(s, u)));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
      CHECK(std::abs(a[i] - b[i]) < 1e-9 * std::max(1.0, std::abs(a[i])));
    ++done;
  }
}

TEST_CASE("multiplier arithmetic") {
  auto s = make_generator_set(42, std::vector<Int>{1, 5, 14, 17, 21});
  CHECK_THROWS_AS(apply_multiplier(s, 6), error);   // gcd(6, 42) > 1
  CHECK_THROWS_AS(apply_multiplier(s, 0), error);

  // u then its inverse is the identity.
  Int u = 5, uinv = 17;  // 5 * 17 = 85 = 2 * 42 + 1
  CHECK(apply_multiplier(apply_multiplier(s, u), uinv) == s);

  CHECK(multiplier_isomorphic(s, s) == 1);
  auto t = apply_multiplier(s, 11);
  auto m = multiplier_isomorphic(s, t);
  REQUIRE(m.has_value());
  CHECK(apply_multiplier(s, *m) == t);
}

TEST_CASE("spectrum order gate") {
  auto g = make_graph(100, std::vector<Int>{1, 3});
  SpectrumOptions tight;
  tight.max_order = 50;
  CHECK_THROWS_AS(spectrum(g, tight), error);
}
