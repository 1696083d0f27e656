#include "ddc/families.hpp"

#include <algorithm>
#include <map>

namespace ddc {

namespace {

Int threshold(Int d) {
  switch (d) {
    case 2: case 3: case 4: return 1;
    case 5: return 2;
    case 6: return 2;
    case 7: return 3;
    case 8: return 2;  // formula only; the k = 2 optimum comes from the catalog
    case 9: return 5;
    default:
      fail(errc::unsupported_degree, "degree " + std::to_string(d));
  }
}

}  // namespace

const std::vector<GeneratorRule>& generator_rules(Int d) {
  static const std::map<Int, std::vector<GeneratorRule>> rules = {
      {6,
       {
           {1, 1, 3, 0, {{{4, 3}, 3}, {{16, 12, 9}, 9}}},
           {1, 1, 3, 2, {{{4, 1}, 3}, {{16, 20, 13}, 9}}},
           {2, 1, 3, 0, {{{8, 6, 0}, 9}, {{8, 18, 18}, 9}}},
           {2, 1, 3, 1, {{{8, 2, 8}, 9}, {{8, 14, 14}, 9}}},
           {2, 1, 3, 2, {{{8, -2, 8}, 9}, {{8, 10, 2}, 9}}},
       }},
      {7,
       {
           {1, 1, 3, 1, {{{4, -1}, 3}, {{16, 4, 7}, 9}}},
           {1, 1, 3, 2, {{{4, 1}, 3}, {{16, -4, 7}, 9}}},
           {2, 1, 3, 0, {{{32, -24, 36, -27}, 27}, {{32, -24, 72, -27}, 27}}},
           {2, 1, 3, 1, {{{32, -24, 24, -5}, 27}, {{32, -24, 60, -41}, 27}}},
           {2, 1, 3, 2, {{{32, -24, 0, -25}, 27}, {{32, -24, 36, 11}, 27}}},
       }},
      {8,
       {
           {1, 1, 2, 0, {{{1, 2, 6, 2}, 2}, {{1, 0, 4, -8, 0}, 4}, {{1, 0, 4, -4, 0}, 4}}},
           {1, 1, 2, 1, {{{1, 1, 5, 3}, 2}, {{1, 0, 2, -8, -11}, 4}, {{1, 0, 2, -4, -7}, 4}}},
       }},
      {9,
       {
           // class 1, generator sets 1..4
           {1, 1, 2, 0, {{{1, 1}, 1}, {{1, -1, 2, 0, -2}, 2}, {{1, -1, 4, 0, -2}, 2}}},
           {1, 1, 4, 1, {{{1, 0}, 1}, {{1, 1, 1, 3, -2}, 4}, {{1, 1, 5, 3, 2}, 4}}},
           {1, 1, 4, 3, {{{1, 0}, 1}, {{1, -1, 1, -3, -2}, 4}, {{1, -1, 5, -3, 2}, 4}}},
           {1, 2, 2, 0, {{{1, -1, 3, -1}, 1}, {{1, -1, 4, -1}, 1}, {{3, -2, 10, -1}, 1}}},
           {1, 2, 2, 1, {{{1, 0, 2, 0}, 1}, {{1, 0, 3, 1}, 1}, {{1, 1, 3, 2}, 1}}},
           {1, 3, 2, 0, {{{1, 0, 2, 2}, 2}, {{1, -1, 4, -2, 2}, 2}, {{1, 0, 2, 2, -2}, 2}}},
           {1, 3, 2, 1, {{{1, -1, 3, -2}, 1}, {{1, 0, 2, 0}, 1}, {{1, 0, 3, -1}, 1}}},
           {1, 4, 6, 0, {{{1, 1, 1, 6, -3}, 3}, {{1, 1, 4, 3, 3}, 3}, {{1, 1, 4, 6, 3}, 3}}},
           {1, 4, 6, 2, {{{1, -1, 2, -2, -3}, 3}, {{1, -1, 2, 1, -3}, 3}, {{1, -1, 5, -2, 3}, 3}}},
           // class 2 (odd diameters), keyed on k mod 14
           {2, 1, 14, 1, {{{1, 1, 5, 0, 0}, 7}, {{1, 1, 5, 7, 7}, 7}, {{3, 3, 8, 7, 0}, 7}}},
           {2, 1, 14, 3, {{{1, -1, 1, -7, -7}, 7}, {{1, -1, 1, 0, 0}, 7}, {{3, -3, 10, -7, 0}, 7}}},
           {2, 1, 14, 5, {{{1, -3, 4, -7, 0}, 7}, {{2, 1, 8, 0, 0}, 7}, {{2, 1, 8, 7, 7}, 7}}},
           {2, 1, 14, 7, {{{2, -3, 7, -7, 0}, 7}, {{3, -1, 7, -7, -7}, 7}, {{3, -1, 7, 0, 0}, 7}}},
           {2, 1, 14, 11, {{{2, 3, 5, 7, 0}, 7}, {{3, 1, 11, 0, 0}, 7}, {{3, 1, 11, 7, 7}, 7}}},
           {2, 1, 14, 13, {{{1, 3, 2, 7, 0}, 7}, {{2, -1, 4, -7, -7}, 7}, {{2, -1, 4, 0, 0}, 7}}},
           {2, 2, 14, 1, {{{1, -3, 2, -7, 0}, 7}, {{2, 1, 4, 0, 0}, 7}, {{2, 1, 4, 7, -7}, 7}}},
           {2, 2, 14, 3, {{{2, -3, 5, -7, 0}, 7}, {{3, -1, 11, -7, 7}, 7}, {{3, -1, 11, 0, 0}, 7}}},
           {2, 2, 14, 7, {{{2, 3, 7, 7, 0}, 7}, {{3, 1, 7, 0, 0}, 7}, {{3, 1, 7, 7, -7}, 7}}},
           {2, 2, 14, 9, {{{1, 3, 4, 7, 0}, 7}, {{2, -1, 8, -7, 7}, 7}, {{2, -1, 8, 0, 0}, 7}}},
           {2, 2, 14, 11, {{{1, 1, 1, 0, 0}, 7}, {{1, 1, 1, 7, -7}, 7}, {{3, 3, 10, 7, 0}, 7}}},
           {2, 2, 14, 13, {{{1, -1, 5, -7, 7}, 7}, {{1, -1, 5, 0, 0}, 7}, {{3, -3, 8, -7, 0}, 7}}},
       }},
  };
  auto it = rules.find(d);
  if (it == rules.end())
    fail(errc::unsupported_degree, "no generator tables for degree " + std::to_string(d));
  return it->second;
}

namespace {

ExtremalStatus status_for(Int d, Int k) {
  Int proven = 0;
  switch (d) {
    case 2: case 3: case 4: case 5: return ExtremalStatus::proven_extremal;
    case 6: proven = 18; break;
    case 7: proven = 10; break;
    case 8: proven = 7; break;
    case 9: proven = 6; break;
  }
  return k <= proven ? ExtremalStatus::proven_extremal : ExtremalStatus::largest_known;
}

FamilyRecord catalog_record(Int d, Int k, Int order, int iso_class,
                            std::initializer_list<Int> gens) {
  FamilyRecord r;
  r.degree = d;
  r.diameter = k;
  r.order = order;
  r.iso_class = iso_class;
  r.variant = 1;
  r.gens = make_generator_set(order, std::vector<Int>(gens));
  r.status = ExtremalStatus::proven_extremal;
  r.provenance = "catalog";
  return r;
}

void bfs_check(FamilyRecord& r, Int k, const FamilyOptions& opts) {
  if (!opts.verify || r.order > opts.verify_ceiling) return;
  CirculantGraph g = make_graph(r.gens);
  Int diam = diameter(g);
  if (diam != k)
    fail(errc::verification_failed,
         "Z_" + std::to_string(r.order) + " " + r.gens.str() + " has diameter " +
             std::to_string(diam) + ", expected " + std::to_string(k));
  r.verified = true;
}

}  // namespace

const char* status_name(ExtremalStatus s) {
  switch (s) {
    case ExtremalStatus::proven_extremal: return "Extremal";
    case ExtremalStatus::largest_known: return "Largest known";
    case ExtremalStatus::not_optimal: return "Not optimal";
  }
  return "?";
}

const RatPoly& family_order_polynomial(Int d, Int k) {
  static const RatPoly cc2{{2, 1}, 1};
  static const RatPoly cc3{{4, 0}, 1};
  static const RatPoly cc4{{2, 2, 1}, 1};
  static const RatPoly cc5{{4, 0, 0}, 1};
  static const std::array<RatPoly, 3> df6 = {{
      {{32, 48, 54, 27}, 27},
      {{32, 48, 78, 31}, 27},
      {{32, 48, 54, 11}, 27},
  }};
  static const std::array<RatPoly, 3> df7 = {{
      {{64, 0, 108, 0}, 27},
      {{64, 0, 60, -16}, 27},
      {{64, 0, 60, 16}, 27},
  }};
  static const std::array<RatPoly, 2> l8 = {{
      {{1, 2, 6, 4, 0}, 2},
      {{1, 2, 6, 6, 1}, 2},
  }};
  static const std::array<RatPoly, 2> l9 = {{
      {{1, 0, 3, 2, 0}, 1},
      {{1, 0, 3, 0, 0}, 1},
  }};
  switch (d) {
    case 2: return cc2;
    case 3: return cc3;
    case 4: return cc4;
    case 5: return cc5;
    case 6: return df6[static_cast<size_t>(k % 3)];
    case 7: return df7[static_cast<size_t>(k % 3)];
    case 8: return l8[static_cast<size_t>(k % 2)];
    case 9: return l9[static_cast<size_t>(k % 2)];
    default:
      fail(errc::unsupported_degree, "degree " + std::to_string(d));
  }
}

Int family_order(Int d, Int k) {
  Int lo = threshold(d);
  if (k < lo)
    fail(errc::diameter_below_threshold, "degree " + std::to_string(d) +
                                             " family starts at diameter " + std::to_string(lo) +
                                             ", got " + std::to_string(k));
  return family_order_polynomial(d, k).eval(k);
}

const std::vector<FamilyRecord>& extremal_catalog(Int d) {
  static const std::vector<FamilyRecord> deg8 = {
      catalog_record(8, 2, 35, 1, {1, 6, 7, 10}),
      catalog_record(8, 2, 35, 2, {1, 7, 11, 16}),
  };
  // Four pairwise inequivalent optima at diameter 3; iso_class just numbers
  // them here.
  static const std::vector<FamilyRecord> deg9 = {
      catalog_record(9, 2, 42, 1, {1, 5, 14, 17, 21}),
      catalog_record(9, 2, 42, 2, {2, 7, 8, 10, 21}),
      catalog_record(9, 3, 130, 1, {1, 8, 14, 47, 65}),
      catalog_record(9, 3, 130, 2, {1, 8, 20, 35, 65}),
      catalog_record(9, 3, 130, 3, {1, 26, 49, 61, 65}),
      catalog_record(9, 3, 130, 4, {2, 8, 13, 32, 65}),
      catalog_record(9, 4, 320, 1, {1, 15, 25, 83, 160}),
  };
  static const std::vector<FamilyRecord> none;
  if (d == 8) return deg8;
  if (d == 9) return deg9;
  return none;
}

namespace {
void build_from_formulas(Int d, Int k, const FamilyOptions& opts, std::vector<FamilyRecord>& out);
}  // namespace

std::vector<FamilyRecord> construct_family(Int d, Int k, const FamilyOptions& opts) {
  std::vector<FamilyRecord> out;

  if (d == 9 && k >= 2 && k <= 4) {
    // Below the closed forms the optimal graphs are known only from search.
    for (FamilyRecord r : extremal_catalog(9)) {
      if (r.diameter != k) continue;
      bfs_check(r, k, opts);
      out.push_back(std::move(r));
    }
  } else {
    build_from_formulas(d, k, opts, out);
  }

  if (out.empty())
    fail(errc::residue_class_unavailable,
         "no generator set listed for degree " + std::to_string(d) + " at diameter " +
             std::to_string(k));

  std::stable_sort(out.begin(), out.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
    if (a.status != b.status) return a.status < b.status;
    if (a.iso_class != b.iso_class) return a.iso_class < b.iso_class;
    return a.variant < b.variant;
  });

  if (!opts.all_variants) {
    std::vector<FamilyRecord> first;
    for (auto& r : out)
      if (first.empty() || first.back().iso_class != r.iso_class ||
          first.back().status != r.status)
        first.push_back(std::move(r));
    out = std::move(first);
  }
  return out;
}

namespace {

void build_from_formulas(Int d, Int k, const FamilyOptions& opts, std::vector<FamilyRecord>& out) {
  Int n = family_order(d, k);

  auto push = [&](int iso_class, int variant, std::vector<Int> gens, ExtremalStatus st,
                  std::string prov) {
    FamilyRecord r;
    r.degree = d;
    r.diameter = k;
    r.order = n;
    r.iso_class = iso_class;
    r.variant = variant;
    if (d % 2 == 1) gens.push_back(n / 2);
    r.gens = make_generator_set(n, gens);
    r.status = st;
    r.provenance = std::move(prov);
    bfs_check(r, k, opts);
    out.push_back(std::move(r));
  };

  switch (d) {
    case 2: push(1, 1, {1}, status_for(d, k), "closed form"); break;
    case 3: push(1, 1, {1}, status_for(d, k), "closed form"); break;
    case 4: push(1, 1, {1, 2 * k + 1}, status_for(d, k), "closed form"); break;
    case 5: push(1, 1, {1, 2 * k - 1}, status_for(d, k), "closed form"); break;
    default: {
      for (const GeneratorRule& rule : generator_rules(d)) {
        if (k % rule.modulus != rule.residue) continue;
        std::vector<Int> gens = {1};
        for (const RatPoly& p : rule.tail) gens.push_back(p.eval(k));
        push(rule.iso_class, rule.variant, std::move(gens),
             d == 8 && k == 2 ? ExtremalStatus::not_optimal : status_for(d, k),
             d == 8 && k == 2 ? "closed form (superseded by catalog)" : "closed form");
      }
      break;
    }
  }

  if (d == 8 && k == 2) {
    // The formula graph of order 32 is valid but the search found order 35.
    FamilyOptions copt = opts;
    std::vector<FamilyRecord> best;
    for (FamilyRecord r : extremal_catalog(8)) {
      bfs_check(r, k, copt);
      best.push_back(std::move(r));
    }
    out.insert(out.begin(), best.begin(), best.end());
  }
}

}  // namespace

VerifyReport verify_family(Int d, Int k_lo, Int k_hi, const FamilyOptions& opts) {
  if (k_hi < k_lo) fail(errc::bad_parameter, "empty diameter range");
  VerifyReport rep;
  rep.degree = d;
  rep.k_lo = k_lo;
  rep.k_hi = k_hi;
  rep.all_ok = true;
  for (Int k = k_lo; k <= k_hi; ++k) {
    VerifyEntry e;
    e.k = k;
    try {
      e.records = construct_family(d, k, opts);
      e.ok = true;
      for (const auto& r : e.records)
        if (r.order <= opts.verify_ceiling) ++rep.graphs_checked;
    } catch (const error& err) {
      e.ok = false;
      e.detail = err.what();
      rep.all_ok = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::optional<Int> companion_multiplier(Int d, Int k, int iso_class, int variant) {
  if (d != 9) return std::nullopt;
  if (k < threshold(9)) return std::nullopt;
  if (variant == 1) return Int(1);
  const bool even = k % 2 == 0;
  if (iso_class == 1) {
    switch (variant) {
      case 2:
        return even ? RatPoly{{3, -2, 10, -1}, 1}.eval(k) : RatPoly{{1, 1, 3, 2}, 1}.eval(k);
      case 3:
        return even ? RatPoly{{1, -1, 4, -2, 2}, 2}.eval(k) : RatPoly{{1, -1, 3, -2}, 1}.eval(k);
      case 4:
        if (k % 6 == 0) return RatPoly{{1, 1, 1, 6, -3}, 3}.eval(k);
        if (k % 6 == 2) return RatPoly{{1, -1, 5, -2, 3}, 3}.eval(k);
        return std::nullopt;
    }
    return std::nullopt;
  }
  if (iso_class == 2 && variant == 2 && !even) {
    switch (k % 14) {
      case 1: return RatPoly{{2, 1, 4, 7, -7}, 7}.eval(k);
      case 3: return RatPoly{{3, -1, 11, -7, 7}, 7}.eval(k);
      case 7: return RatPoly{{3, 1, 7, 7, -7}, 7}.eval(k);
      case 11: return RatPoly{{1, 1, 1, 7, -7}, 7}.eval(k);
      case 13: return RatPoly{{1, -1, 5, -7, 7}, 7}.eval(k);
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace ddc
