#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "ddc/exact.hpp"

namespace ddc {

// Connection set of an undirected circulant graph on Z_n, stored as the
// reduced generators: residues in (0, n/2], strictly increasing. A generator
// g < n/2 stands for the edge pair {+g, -g}; g == n/2 (n even) is its own
// inverse and contributes a single edge per vertex.
struct GeneratorSet {
  Int n = 0;
  std::vector<Int> gens;

  bool has_half() const { return n % 2 == 0 && !gens.empty() && gens.back() * 2 == n; }
  // Number of generators strictly below n/2.
  int dimension() const { return static_cast<int>(gens.size()) - (has_half() ? 1 : 0); }
  int degree() const { return 2 * dimension() + (has_half() ? 1 : 0); }
  std::string str() const;

  friend auto operator<=>(const GeneratorSet&, const GeneratorSet&) = default;
};

// Reduces raw residues mod n into (0, n/2], sorts, and validates:
// no residue may be 0 mod n, and no two may collapse to the same generator.
GeneratorSet make_generator_set(Int n, std::span<const Int> raw);

struct CirculantGraph {
  GeneratorSet gens;
  std::vector<Int> connection;  // residues in [1, n-1], closed under negation

  Int order() const { return gens.n; }
  int degree() const { return static_cast<int>(connection.size()); }
};

// Validates connectivity (gcd of n and all generators must be 1) on top of
// make_generator_set, and materializes the connection set.
CirculantGraph make_graph(Int n, std::span<const Int> raw_gens);
CirculantGraph make_graph(const GeneratorSet& gs);

// counts[i] = number of vertices at distance exactly i from vertex 0.
// Vertex transitivity makes the profile from 0 the profile from anywhere.
struct DistanceProfile {
  std::vector<Int> counts;
  Int eccentricity() const { return static_cast<Int>(counts.size()) - 1; }
  Int total() const;
};

DistanceProfile distance_profile(const CirculantGraph& g);
Int diameter(const CirculantGraph& g);

// Single BFS that stops as soon as the answer is known; the workhorse of the
// exhaustive searches. Returns true iff every vertex is within distance k.
bool diameter_at_most(const CirculantGraph& g, Int k);

// Reusable BFS scratch for tight loops: one allocation, many graphs of the
// same (or smaller) order.
class BfsScratch {
 public:
  bool diameter_at_most(Int n, std::span<const Int> connection, Int k);

 private:
  std::vector<std::uint32_t> dist_;
  std::vector<std::uint32_t> cur_, next_;
  std::uint32_t epoch_ = 0;
};

}  // namespace ddc
