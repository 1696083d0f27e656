#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddc/graph.hpp"

namespace ddc {

// Lexicographically least image of the reduced set over all unit multipliers
// of Z_n: a complete invariant for multiplier equivalence. Note the orbit
// minimum need not contain 1; sets whose elements all share a factor with n
// never map onto one that does.
GeneratorSet canonical_form(const GeneratorSet& s);

struct EnumOptions {
  // Domain is {1..floor(n/2)}. Searches of even degree on even n drop n/2
  // itself (it would lower the degree); odd degree searches adjoin n/2 to
  // every emitted set and require n even.
  bool exclude_half = false;
  bool adjoin_half = false;
  bool canonical_only = false;  // emit orbit minima only
};

// Visits every f-subset passing the connectivity gcd filter in lexicographic
// order. The visitor returns false to stop early.
void for_each_generator_set(Int n, int f, const EnumOptions& opts,
                            const std::function<bool(const GeneratorSet&)>& visit);

std::vector<GeneratorSet> enumerate_generator_sets(Int n, int f, const EnumOptions& opts = {});

enum class SearchMode { exhaustive, first_witness };

struct SearchProgress {
  Int current_n = 0;
  std::uint64_t sets_tested = 0;
  double sets_per_second = 0.0;
  double elapsed_seconds = 0.0;
};

struct SearchConfig {
  std::optional<Int> ceiling;  // default: the sphere upper bound
  SearchMode mode = SearchMode::exhaustive;
  bool prune = true;    // orbit-representative pruning; off reproduces the raw scan
  int threads = 0;      // 0 = hardware concurrency
  std::string checkpoint_path;  // resumable progress log, empty to disable
  std::function<void(const SearchProgress&)> on_progress;
  std::chrono::milliseconds progress_interval{2000};
};

struct WitnessClass {
  GeneratorSet canonical;
  std::vector<GeneratorSet> members;  // witnesses found, sorted
};

struct SearchResult {
  Int degree = 0;
  Int diameter = 0;
  Int ceiling = 0;
  Int extremal_order = 0;            // 0 when nothing found down to the floor
  std::vector<WitnessClass> classes; // at extremal_order, grouped by canonical form
  bool exhaustive = false;  // every order in (extremal_order, ceiling] fully scanned
  bool pruned = false;
  std::uint64_t sets_tested = 0;
  double seconds = 0.0;
};

// Scans orders downward from the ceiling and reports the largest order
// admitting a circulant graph of the given degree and diameter, with all
// witness isomorphism classes in exhaustive mode. The ceiling defaults to the
// sphere bound; supplying one below a known constructive witness is refused.
SearchResult search_extremal(Int degree, Int k, const SearchConfig& = {});

}  // namespace ddc
