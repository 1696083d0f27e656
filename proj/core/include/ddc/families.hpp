#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddc/exact.hpp"
#include "ddc/graph.hpp"

namespace ddc {

enum class ExtremalStatus {
  proven_extremal,  // optimal, certified by exhaustive search
  largest_known,    // best published order, optimality open
  not_optimal,      // formula value that a search catalog supersedes
};

const char* status_name(ExtremalStatus s);

struct FamilyRecord {
  Int degree = 0;
  Int diameter = 0;
  Int order = 0;
  int iso_class = 1;  // isomorphism class, 1 or 2
  int variant = 1;    // generator set number within the class
  GeneratorSet gens;
  ExtremalStatus status = ExtremalStatus::largest_known;
  std::string provenance;
  bool verified = false;  // BFS-checked diameter == k
};

struct FamilyOptions {
  bool verify = true;             // BFS each record after construction
  Int verify_ceiling = 10'000'000;  // skip the BFS above this order
  bool all_variants = true;       // emit every generator set, not one per class
};

// Largest known circulant order for degree d and diameter k, by the closed
// forms. Degrees 2..9; thresholds vary by degree (e.g. degree 9 needs k >= 5).
// For degree 8, k = 2 the formula value 32 is returned even though the search
// catalog holds graphs of order 35; construct_family surfaces both.
Int family_order(Int d, Int k);

// Hard-coded optimal graphs for the small diameters the closed forms do not
// reach (degree 8: k = 2; degree 9: k = 2..4). One record per isomorphism
// class, orders and generator sets from exhaustive search.
const std::vector<FamilyRecord>& extremal_catalog(Int d);

std::vector<FamilyRecord> construct_family(Int d, Int k, const FamilyOptions& = {});

struct VerifyEntry {
  Int k = 0;
  bool ok = false;
  std::string detail;  // failure description when !ok
  std::vector<FamilyRecord> records;
};

struct VerifyReport {
  Int degree = 0;
  Int k_lo = 0, k_hi = 0;
  std::vector<VerifyEntry> entries;
  Int graphs_checked = 0;
  bool all_ok = false;
};

// construct_family over an inclusive diameter range, collecting failures
// instead of throwing on the first one.
VerifyReport verify_family(Int d, Int k_lo, Int k_hi, const FamilyOptions& = {});

// The multiplier carrying generator set 1 of the given isomorphism class to
// the requested variant (degree 9 only; these are the published isomorphism
// factors). Empty when the variant does not exist for this k.
std::optional<Int> companion_multiplier(Int d, Int k, int iso_class, int variant);

// The order closed form applicable to diameter k, for table rendering.
const RatPoly& family_order_polynomial(Int d, Int k);

// One generator-set family: applies when k % modulus == residue. The leading
// generator 1 is implicit, and odd degrees additionally take n/2.
struct GeneratorRule {
  int iso_class;
  int variant;
  Int modulus;
  Int residue;
  std::vector<RatPoly> tail;  // generators after the 1
};

// Every generator-set closed form for degree d in 6..9.
const std::vector<GeneratorRule>& generator_rules(Int d);

}  // namespace ddc
