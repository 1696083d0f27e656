#include "ddc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ddc {

Spectrum spectrum(const CirculantGraph& g, const SpectrumOptions& opts) {
  const Int n = g.order();
  if (n > opts.max_order)
    fail(errc::too_large, "order " + std::to_string(n) + " above spectrum limit " +
                              std::to_string(opts.max_order));
  const bool half = g.gens.has_half();
  std::vector<Int> proper;  // generators strictly below n/2
  for (Int v : g.gens.gens)
    if (2 * v != n) proper.push_back(v);

  Spectrum s;
  s.n = n;
  s.degree = g.degree();
  s.eig.resize(static_cast<size_t>(n));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (Int l = 1; l <= n; ++l) {
    double sum = 0.0, comp = 0.0;  // Kahan accumulation
    auto add = [&](double t) {
      double y = t - comp;
      double u = sum + y;
      comp = (u - sum) - y;
      sum = u;
    };
    for (Int v : proper) {
      Int r = (l * v) % n;  // exact reduction keeps the cosine argument small
      add(2.0 * std::cos(step * static_cast<double>(r)));
    }
    if (half) add(l % 2 == 0 ? 1.0 : -1.0);
    s.eig[static_cast<size_t>(l - 1)] = sum;
  }
  return s;
}

namespace {

Inertia count_at(const Spectrum& s, double tau) {
  Inertia r;
  for (double v : s.eig) {
    if (v > tau)
      ++r.positive;
    else if (v < -tau)
      ++r.negative;
    else
      ++r.zero;
  }
  return r;
}

}  // namespace

Inertia inertia(const Spectrum& s) {
  static constexpr double sweep[] = {1e-10, 1e-9, 1e-8, 1e-7, 1e-6};
  Inertia at_default = count_at(s, 1e-8);
  for (double tau : sweep) {
    if (count_at(s, tau) != at_default)
      fail(errc::unstable_classification,
           "inertia depends on the zero threshold near tau=" + std::to_string(tau));
  }
  return at_default;
}

GeneratorSet apply_multiplier(const GeneratorSet& s, Int u) {
  Int r = u % s.n;
  if (r < 0) r += s.n;
  if (std::gcd(r, s.n) != 1)
    fail(errc::not_a_unit, std::to_string(u) + " is not a unit mod " + std::to_string(s.n));
  std::vector<Int> mapped;
  mapped.reserve(s.gens.size());
  for (Int g : s.gens) mapped.push_back((r * g) % s.n);
  return make_generator_set(s.n, mapped);
}

std::optional<Int> multiplier_isomorphic(const GeneratorSet& a, const GeneratorSet& b) {
  if (a.n != b.n)
    fail(errc::bad_parameter, "generator sets live on different cyclic groups");
  if (a.gens.size() != b.gens.size()) return std::nullopt;
  for (Int u = 1; u < a.n; ++u) {
    if (std::gcd(u, a.n) != 1) continue;
    if (apply_multiplier(a, u) == b) return u;
  }
  return std::nullopt;
}

}  // namespace ddc
