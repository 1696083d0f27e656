#include "ddc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ddc {

namespace {

constexpr Int kMaxOrder = 2'000'000'000;  // vertex ids are kept in 32 bits

void check_order(Int n) {
  if (n < 2) fail(errc::bad_parameter, "order must be at least 2, got " + std::to_string(n));
  if (n > kMaxOrder) fail(errc::too_large, "order " + std::to_string(n) + " exceeds BFS limit");
}

}  // namespace

std::string GeneratorSet::str() const {
  std::string s = "{";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens[i]);
  }
  return s + "}";
}

GeneratorSet make_generator_set(Int n, std::span<const Int> raw) {
  check_order(n);
  if (raw.empty()) fail(errc::bad_parameter, "empty generator list");
  GeneratorSet out;
  out.n = n;
  out.gens.reserve(raw.size());
  for (Int g : raw) {
    Int r = g % n;
    if (r < 0) r += n;
    if (r == 0)
      fail(errc::zero_residue, std::to_string(g) + " is 0 mod " + std::to_string(n));
    out.gens.push_back(std::min(r, n - r));
  }
  std::sort(out.gens.begin(), out.gens.end());
  auto dup = std::adjacent_find(out.gens.begin(), out.gens.end());
  if (dup != out.gens.end())
    fail(errc::duplicate_generator,
         "residue " + std::to_string(*dup) + " appears twice after reduction mod " +
             std::to_string(n));
  return out;
}

CirculantGraph make_graph(const GeneratorSet& gs) {
  Int g = gs.n;
  for (Int v : gs.gens) g = std::gcd(g, v);
  if (g != 1)
    fail(errc::disconnected,
         "gcd(" + std::to_string(gs.n) + ", generators) = " + std::to_string(g));
  CirculantGraph out;
  out.gens = gs;
  for (Int v : gs.gens) {
    out.connection.push_back(v);
    if (2 * v != gs.n) out.connection.push_back(gs.n - v);
  }
  std::sort(out.connection.begin(), out.connection.end());
  return out;
}

CirculantGraph make_graph(Int n, std::span<const Int> raw_gens) {
  return make_graph(make_generator_set(n, raw_gens));
}

Int DistanceProfile::total() const {
  Int t = 0;
  for (Int c : counts) t += c;
  return t;
}

DistanceProfile distance_profile(const CirculantGraph& g) {
  const Int n = g.order();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::uint32_t> cur, next;
  cur.reserve(64);
  seen[0] = 1;
  cur.push_back(0);
  Int visited = 1;

  DistanceProfile p;
  p.counts.push_back(1);
  while (visited < n) {
    next.clear();
    for (std::uint32_t v : cur) {
      for (Int c : g.connection) {
        Int u = v + c;
        if (u >= n) u -= n;
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          next.push_back(static_cast<std::uint32_t>(u));
        }
      }
    }
    if (next.empty())
      fail(errc::invariant_violated, "BFS stalled before covering Z_" + std::to_string(n));
    visited += static_cast<Int>(next.size());
    p.counts.push_back(static_cast<Int>(next.size()));
    std::swap(cur, next);
  }
  return p;
}

Int diameter(const CirculantGraph& g) { return distance_profile(g).eccentricity(); }

bool diameter_at_most(const CirculantGraph& g, Int k) {
  BfsScratch scratch;
  return scratch.diameter_at_most(g.order(), g.connection, k);
}

bool BfsScratch::diameter_at_most(Int n, std::span<const Int> connection, Int k) {
  check_order(n);
  if (k < 0) return false;
  if (static_cast<Int>(dist_.size()) < n) {
    dist_.assign(static_cast<size_t>(n), 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {  // stamp wrapped, start over
    std::fill(dist_.begin(), dist_.end(), 0);
    epoch_ = 1;
  }
  cur_.clear();
  dist_[0] = epoch_;
  cur_.push_back(0);
  Int seen = 1;
  for (Int level = 0; level < k && seen < n && !cur_.empty(); ++level) {
    next_.clear();
    for (std::uint32_t v : cur_) {
      for (Int c : connection) {
        Int u = v + c;
        if (u >= n) u -= n;
        auto& stamp = dist_[static_cast<size_t>(u)];
        if (stamp != epoch_) {
          stamp = epoch_;
          next_.push_back(static_cast<std::uint32_t>(u));
          ++seen;
        }
      }
    }
    std::swap(cur_, next_);
  }
  return seen == n;
}

}  // namespace ddc
