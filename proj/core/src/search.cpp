#include "ddc/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "ddc/bounds.hpp"

namespace ddc {

GeneratorSet canonical_form(const GeneratorSet& s) {
  const Int n = s.n;
  std::vector<Int> best = s.gens;
  std::vector<Int> image(s.gens.size());
  for (Int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (size_t i = 0; i < s.gens.size(); ++i) {
      Int r = (u * s.gens[i]) % n;
      image[i] = std::min(r, n - r);
    }
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  }
  GeneratorSet out;
  out.n = n;
  out.gens = std::move(best);
  return out;
}

namespace {

Int domain_max(Int n, const EnumOptions& opts) {
  if (opts.adjoin_half) {
    if (n % 2 != 0) fail(errc::bad_parameter, "odd order cannot adjoin n/2");
    return n / 2 - 1;
  }
  if (opts.exclude_half && n % 2 == 0) return n / 2 - 1;
  return n / 2;
}

bool connected(Int n, const std::vector<Int>& gens, bool with_half) {
  Int g = n;
  for (Int v : gens) g = std::gcd(g, v);
  if (with_half) g = std::gcd(g, n / 2);
  return g == 1;
}

}  // namespace

void for_each_generator_set(Int n, int f, const EnumOptions& opts,
                            const std::function<bool(const GeneratorSet&)>& visit) {
  if (n < 2) fail(errc::bad_parameter, "order " + std::to_string(n));
  if (f < 1) fail(errc::invalid_dimension, "dimension " + std::to_string(f));
  const Int m = domain_max(n, opts);
  std::vector<Int> pick(static_cast<size_t>(f));
  bool stop = false;

  auto emit = [&]() {
    if (!connected(n, pick, opts.adjoin_half)) return;
    std::vector<Int> gens = pick;
    if (opts.adjoin_half) gens.push_back(n / 2);
    GeneratorSet gs;
    gs.n = n;
    gs.gens = std::move(gens);
    if (opts.canonical_only && canonical_form(gs) != gs) return;
    if (!visit(gs)) stop = true;
  };

  auto rec = [&](auto&& self, int depth, Int lo) -> void {
    if (stop) return;
    if (depth == f) {
      emit();
      return;
    }
    for (Int v = lo; v <= m - (f - depth - 1) && !stop; ++v) {
      pick[static_cast<size_t>(depth)] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
}

std::vector<GeneratorSet> enumerate_generator_sets(Int n, int f, const EnumOptions& opts) {
  std::vector<GeneratorSet> out;
  for_each_generator_set(n, f, opts, [&](const GeneratorSet& gs) {
    out.push_back(gs);
    return true;
  });
  return out;
}

namespace {

// A work unit is (n, first generator). In pruned mode unit 1 carries every
// set containing 1 and a unit g1 > 1 carries only sets whose elements all
// share a factor with n; any other set is a unit multiple of one of these,
// so every equivalence class is still scanned.
struct Unit {
  Int g1 = 0;
  std::vector<GeneratorSet> witnesses;
  bool ran = false;
};

struct OrderScan {
  Int n;
  int f;
  bool odd_degree;
  Int k;
  bool prune;
  SearchMode mode;

  std::vector<Unit> units;
  std::vector<Int> noncoprime;  // sorted domain elements g with gcd(g, n) > 1

  std::atomic<size_t> cursor{0};
  std::atomic<size_t> min_found{SIZE_MAX};
  std::atomic<std::uint64_t> tested{0};

  Int dmax() const { return n % 2 == 0 ? n / 2 - 1 : n / 2; }

  void build_units() {
    const Int m = dmax();
    if (m < f) return;
    if (!prune) {
      for (Int g1 = 1; g1 + f - 1 <= m; ++g1) units.push_back({g1, {}, false});
      return;
    }
    for (Int g = 2; g <= m; ++g)
      if (std::gcd(g, n) != 1) noncoprime.push_back(g);
    units.push_back({1, {}, false});
    for (size_t i = 0; i + static_cast<size_t>(f) <= noncoprime.size(); ++i)
      units.push_back({noncoprime[i], {}, false});
  }

  void run_unit(size_t idx, BfsScratch& scratch, std::vector<Int>& conn) {
    Unit& u = units[idx];
    u.ran = true;
    std::vector<Int> pick(static_cast<size_t>(f));
    pick[0] = u.g1;

    auto test = [&](const std::vector<Int>& gens) {
      if (!connected(n, gens, odd_degree)) return;
      conn.clear();
      for (Int g : gens) {
        conn.push_back(g);
        conn.push_back(n - g);
      }
      if (odd_degree) conn.push_back(n / 2);
      tested.fetch_add(1, std::memory_order_relaxed);
      if (!scratch.diameter_at_most(n, conn, k)) return;
      std::vector<Int> full = gens;
      if (odd_degree) full.push_back(n / 2);
      GeneratorSet gs;
      gs.n = n;
      gs.gens = std::move(full);
      u.witnesses.push_back(std::move(gs));
      if (mode == SearchMode::first_witness) {
        size_t cur = min_found.load(std::memory_order_relaxed);
        while (idx < cur && !min_found.compare_exchange_weak(cur, idx)) {
        }
      }
    };

    auto abort_now = [&] {
      // In first witness mode a unit stops once a lower-index unit has found
      // something, or once it has a witness of its own (only the first one
      // per unit can ever be reported).
      return mode == SearchMode::first_witness &&
             (min_found.load(std::memory_order_relaxed) < idx || !u.witnesses.empty());
    };

    if (prune && u.g1 > 1) {
      // all elements from the noncoprime pool, min element pinned to g1
      size_t base = static_cast<size_t>(
          std::lower_bound(noncoprime.begin(), noncoprime.end(), u.g1) - noncoprime.begin());
      auto rec = [&](auto&& self, int depth, size_t at) -> void {
        if (abort_now()) return;
        if (depth == f) {
          test(pick);
          return;
        }
        for (size_t i = at; noncoprime.size() + static_cast<size_t>(depth) >=
                            static_cast<size_t>(f) + i;
             ++i) {
          pick[static_cast<size_t>(depth)] = noncoprime[i];
          self(self, depth + 1, i + 1);
          if (abort_now()) return;
        }
      };
      rec(rec, 1, base + 1);
      return;
    }

    const Int m = dmax();
    auto rec = [&](auto&& self, int depth, Int lo) -> void {
      if (abort_now()) return;
      if (depth == f) {
        test(pick);
        return;
      }
      for (Int v = lo; v <= m - (f - depth - 1); ++v) {
        pick[static_cast<size_t>(depth)] = v;
        self(self, depth + 1, v + 1);
        if (abort_now()) return;
      }
    };
    rec(rec, 1, u.g1 + 1);
  }
};

struct Checkpoint {
  std::string path;
  std::map<Int, std::set<Int>> done;
  std::mutex mu;

  void load() {
    if (path.empty()) return;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      Int n = 0, g1 = 0;
      if (std::sscanf(line.c_str(), "n=%ld prefix=%ld status=done", &n, &g1) == 2)
        done[n].insert(g1);
    }
  }

  bool is_done(Int n, Int g1) {
    if (path.empty()) return false;
    auto it = done.find(n);
    return it != done.end() && it->second.count(g1) > 0;
  }

  void mark(Int n, Int g1) {
    if (path.empty()) return;
    std::lock_guard<std::mutex> lock(mu);
    done[n].insert(g1);
    std::ofstream out(path, std::ios::app);
    out << "n=" << n << " prefix=" << g1 << " status=done\n";
  }
};

}  // namespace

SearchResult search_extremal(Int degree, Int k, const SearchConfig& config) {
  if (degree < 2) fail(errc::unsupported_degree, "degree " + std::to_string(degree));
  if (k < 1) fail(errc::bad_parameter, "diameter " + std::to_string(k));
  const bool odd = degree % 2 == 1;
  const int f = static_cast<int>(odd ? (degree - 1) / 2 : degree / 2);

  SearchResult res;
  res.degree = degree;
  res.diameter = k;
  res.pruned = config.prune;
  res.ceiling = config.ceiling ? *config.ceiling : to_int64(mac_upper_bound(degree, k));
  if (res.ceiling < 2) fail(errc::bad_parameter, "ceiling below any graph order");
  if (!odd && degree >= 6 && k >= 2 * f - 3) {  // domain of the constructive bound
    Int witness = cj_lower_bound(degree, k).order;
    if (res.ceiling < witness)
      fail(errc::ceiling_below_known_witness,
           "ceiling " + std::to_string(res.ceiling) + " below the constructive witness order " +
               std::to_string(witness));
  }

  Checkpoint ckpt;
  ckpt.path = config.checkpoint_path;
  ckpt.load();

  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  std::uint64_t tested_before = 0;
  auto last_report = t0;
  std::mutex report_mu;

  for (Int n = res.ceiling; n >= 2; --n) {
    if (odd && n % 2 != 0) continue;

    OrderScan scan{n, f, odd, k, config.prune, config.mode};
    scan.build_units();
    if (scan.units.empty()) continue;

    auto worker = [&] {
      BfsScratch scratch;
      std::vector<Int> conn;
      for (;;) {
        size_t idx = scan.cursor.fetch_add(1);
        if (idx >= scan.units.size()) return;
        if (config.mode == SearchMode::first_witness &&
            scan.min_found.load(std::memory_order_relaxed) < idx)
          continue;
        Int g1 = scan.units[idx].g1;
        if (ckpt.is_done(n, g1)) continue;
        scan.run_unit(idx, scratch, conn);
        bool aborted = config.mode == SearchMode::first_witness &&
                       scan.min_found.load(std::memory_order_relaxed) < idx;
        if (!aborted && scan.units[idx].witnesses.empty()) ckpt.mark(n, g1);
        if (config.on_progress) {
          std::lock_guard<std::mutex> lock(report_mu);
          auto now = std::chrono::steady_clock::now();
          if (now - last_report >= config.progress_interval) {
            last_report = now;
            double secs = elapsed();
            std::uint64_t total = tested_before + scan.tested.load();
            config.on_progress({n, total, secs > 0 ? total / secs : 0.0, secs});
          }
        }
      }
    };

    if (threads == 1 || scan.units.size() == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      int tn = std::min<int>(threads, static_cast<int>(scan.units.size()));
      for (int t = 0; t < tn; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    tested_before += scan.tested.load();

    std::vector<GeneratorSet> witnesses;
    if (config.mode == SearchMode::first_witness) {
      size_t w = scan.min_found.load();
      if (w != SIZE_MAX) witnesses.push_back(scan.units[w].witnesses.front());
    } else {
      for (const Unit& u : scan.units)
        witnesses.insert(witnesses.end(), u.witnesses.begin(), u.witnesses.end());
    }
    if (witnesses.empty()) continue;

    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    res.extremal_order = n;
    std::map<GeneratorSet, WitnessClass> classes;
    for (const GeneratorSet& w : witnesses) {
      GeneratorSet c = canonical_form(w);
      auto& cls = classes[c];
      cls.canonical = c;
      cls.members.push_back(w);
    }
    for (auto& [c, cls] : classes) res.classes.push_back(std::move(cls));
    break;
  }

  res.exhaustive = true;
  res.sets_tested = tested_before;
  res.seconds = elapsed();
  return res;
}

}  // namespace ddc
