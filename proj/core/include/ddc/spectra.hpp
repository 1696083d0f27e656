#pragma once

#include <optional>
#include <vector>

#include "ddc/graph.hpp"

namespace ddc {

struct SpectrumOptions {
  Int max_order = 50'000;  // refuse larger graphs unless raised explicitly
};

struct Spectrum {
  Int n = 0;
  int degree = 0;
  // eig[l-1] is the eigenvalue of character l, l = 1..n; eig[n-1] (l = n,
  // the trivial character) equals the degree.
  std::vector<double> eig;
};

// Eigenvalues of the adjacency matrix via the character cosine sums. Sums are
// compensated and cosine arguments reduced mod n, so values are accurate to a
// few ulp even for the largest supported orders.
Spectrum spectrum(const CirculantGraph& g, const SpectrumOptions& = {});

struct Inertia {
  Int positive = 0;
  Int zero = 0;
  Int negative = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Signature of the spectrum with zero threshold tau = 1e-8. The count is
// recomputed across thresholds 1e-10..1e-6; if any eigenvalue migrates the
// classification is unstable and an error is raised rather than a guess.
Inertia inertia(const Spectrum& s);

// Image of a generator set under the unit multiplier u: g -> u*g, reduced.
// Multipliers are graph isomorphisms, so spectra and distance profiles are
// invariant under this map.
GeneratorSet apply_multiplier(const GeneratorSet& s, Int u);

// Least unit carrying a onto b, if any. Two circulant graphs on Z_n are
// multiplier equivalent exactly when such a unit exists.
std::optional<Int> multiplier_isomorphic(const GeneratorSet& a, const GeneratorSet& b);

}  // namespace ddc
