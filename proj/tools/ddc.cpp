// Command line front end: construction, verification, search, bounds,
// spectra, isomorphism tests, the quotient lattice, and the reference tables.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ddc/bounds.hpp"
#include "ddc/error.hpp"
#include "ddc/families.hpp"
#include "ddc/graph.hpp"
#include "ddc/lattice.hpp"
#include "ddc/search.hpp"
#include "ddc/spectra.hpp"
#include "ddc/tables.hpp"
#include "json.hpp"

namespace {

using ddc::Int;
using njson = nlohmann::ordered_json;

struct Options {
  std::string format = "human";
  int threads = 0;
  bool allow_long = false;
};

// Orders above this are refused for single-graph BFS unless --allow-long.
constexpr Int kOrderGate = 10'000'000;
constexpr Int kSpectrumGate = 50'000;
constexpr Int kLatticeVerifyGate = 40;

// Largest diameter searchable without --allow-long; chosen so every ungated
// search finishes within minutes on one core.
Int search_gate(Int degree) {
  switch (degree) {
    case 2:
    case 3: return 50;
    case 4:
    case 5: return 30;
    case 6: return 6;
    case 7: return 5;
    case 8:
    case 9: return 3;
    default: return 0;
  }
}

int resolve_threads(int cli_value) {
  if (cli_value > 0) return cli_value;
  if (const char* env = std::getenv("DDC_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default: hardware concurrency
}

std::string join(const std::vector<Int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  return out + "\"";
}

// The one record shape shared by diameter, construct, and search output.
struct Record {
  Int n = 0;
  int degree = 0;
  std::vector<Int> gens;
  Int diameter = 0;
  std::optional<int> iso_class;
  std::string provenance;
};

njson record_json(const Record& r) {
  njson j;
  j["n"] = r.n;
  j["degree"] = r.degree;
  j["generators"] = r.gens;
  j["diameter"] = r.diameter;
  if (r.iso_class)
    j["iso_class"] = *r.iso_class;
  else
    j["iso_class"] = nullptr;
  j["provenance"] = r.provenance;
  return j;
}

void emit_records(const std::vector<Record>& recs, const Options& opt) {
  if (opt.format == "json") {
    for (const Record& r : recs) std::cout << record_json(r).dump() << "\n";
    return;
  }
  if (opt.format == "csv") {
    std::cout << "n,degree,generators,diameter,iso_class,provenance\n";
    for (const Record& r : recs) {
      std::cout << r.n << "," << r.degree << "," << csv_cell(join(r.gens)) << "," << r.diameter
                << "," << (r.iso_class ? std::to_string(*r.iso_class) : "") << ","
                << csv_cell(r.provenance) << "\n";
    }
    return;
  }
  for (const Record& r : recs) {
    std::cout << "order=" << r.n << " degree=" << r.degree << " diameter=" << r.diameter
              << " class=" << (r.iso_class ? std::to_string(*r.iso_class) : "-")
              << " gens=" << join(r.gens) << " provenance=" << r.provenance << "\n";
  }
}

void gate_order(Int n, const Options& opt, const char* what) {
  if (n > kOrderGate && !opt.allow_long)
    ddc::fail(ddc::errc::bad_parameter,
              std::string(what) + " on " + std::to_string(n) +
                  " vertices exceeds the desk scale gate; pass --allow-long");
}

// ---------------------------------------------------------------- diameter

void run_diameter(Int n, const std::vector<Int>& gens, const Options& opt) {
  gate_order(n, opt, "BFS");
  auto g = ddc::make_graph(n, gens);
  Record r;
  r.n = n;
  r.degree = g.degree();
  r.gens = g.gens.gens;
  r.diameter = ddc::diameter(g);
  r.provenance = "input";
  emit_records({r}, opt);
}

// --------------------------------------------------------------- construct

void run_construct(Int degree, Int k, bool all_variants, bool no_verify, const Options& opt) {
  ddc::FamilyOptions fo;
  fo.verify = !no_verify;
  fo.verify_ceiling = opt.allow_long ? std::numeric_limits<Int>::max() : kOrderGate;
  fo.all_variants = all_variants;
  std::vector<Record> recs;
  for (const ddc::FamilyRecord& fr : ddc::construct_family(degree, k, fo)) {
    if (fr.status == ddc::ExtremalStatus::not_optimal && !all_variants) continue;
    Record r;
    r.n = fr.order;
    r.degree = static_cast<int>(degree);
    r.gens = fr.gens.gens;
    r.diameter = fr.diameter;
    r.iso_class = fr.iso_class;
    r.provenance = fr.verified ? fr.provenance : fr.provenance + " (unverified)";
    recs.push_back(std::move(r));
  }
  emit_records(recs, opt);
}

// ------------------------------------------------------------------ bounds

struct BoundsRow {
  Int k = 0;
  std::optional<Int> lower, order;
  ddc::BigInt upper;
};

void run_bounds(Int degree, Int k_lo, Int k_hi, const Options& opt) {
  if (k_hi < k_lo) ddc::fail(ddc::errc::bad_parameter, "empty diameter range");
  std::vector<BoundsRow> rows;
  for (Int k = k_lo; k <= k_hi; ++k) {
    BoundsRow row;
    row.k = k;
    row.upper = ddc::mac_upper_bound(degree, k);
    try {
      row.lower = ddc::cj_lower_bound(degree, k).order;
    } catch (const ddc::error&) {
    }
    try {
      ddc::FamilyOptions fo;
      fo.verify = false;
      for (const auto& fr : ddc::construct_family(degree, k, fo))
        if (fr.status != ddc::ExtremalStatus::not_optimal)
          row.order = std::max(row.order.value_or(0), fr.order);
    } catch (const ddc::error&) {
    }
    rows.push_back(std::move(row));
  }

  auto cell = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : ""; };
  if (opt.format == "json") {
    for (const auto& r : rows) {
      njson j;
      j["degree"] = degree;
      j["k"] = r.k;
      if (r.lower)
        j["lower"] = *r.lower;
      else
        j["lower"] = nullptr;
      if (r.order)
        j["order"] = *r.order;
      else
        j["order"] = nullptr;
      j["upper"] = r.upper.str();
      std::cout << j.dump() << "\n";
    }
    return;
  }
  if (opt.format == "csv") {
    std::cout << "degree,k,lower,order,upper\n";
    for (const auto& r : rows)
      std::cout << degree << "," << r.k << "," << cell(r.lower) << "," << cell(r.order) << ","
                << r.upper.str() << "\n";
    return;
  }
  for (const auto& r : rows) {
    std::cout << "degree=" << degree << " k=" << r.k;
    if (r.lower) std::cout << " lower=" << *r.lower;
    if (r.order) std::cout << " order=" << *r.order;
    std::cout << " upper=" << r.upper.str() << "\n";
  }
}

// ------------------------------------------------------------------ search

void run_search(Int degree, Int k, std::optional<Int> ceiling, bool first_witness, bool no_prune,
                const std::string& checkpoint, const Options& opt) {
  if (k > search_gate(degree) && !opt.allow_long)
    ddc::fail(ddc::errc::bad_parameter,
              "diameter " + std::to_string(k) + " exceeds the desk scale search gate for degree " +
                  std::to_string(degree) + " (k <= " + std::to_string(search_gate(degree)) +
                  "); pass --allow-long");
  ddc::SearchConfig cfg;
  cfg.ceiling = ceiling;
  cfg.mode = first_witness ? ddc::SearchMode::first_witness : ddc::SearchMode::exhaustive;
  cfg.prune = !no_prune;
  cfg.threads = resolve_threads(opt.threads);
  cfg.checkpoint_path = checkpoint;
  cfg.on_progress = [](const ddc::SearchProgress& p) {
    std::cerr << "order " << p.current_n << ": " << p.sets_tested << " sets, "
              << static_cast<long long>(p.sets_per_second) << "/s, " << p.elapsed_seconds
              << "s\n";
  };

  ddc::SearchResult res = ddc::search_extremal(degree, k, cfg);

  std::ostream& summary = opt.format == "human" ? std::cout : std::cerr;
  summary << "degree=" << res.degree << " k=" << res.diameter << " ceiling=" << res.ceiling
          << " extremal=" << res.extremal_order << " classes=" << res.classes.size()
          << " exhaustive=" << (res.exhaustive ? "true" : "false")
          << " sets_tested=" << res.sets_tested << " seconds=" << res.seconds << "\n";

  std::vector<Record> recs;
  for (size_t i = 0; i < res.classes.size(); ++i) {
    const auto& wc = res.classes[i];
    Record r;
    r.n = res.extremal_order;
    r.degree = static_cast<int>(degree);
    r.gens = wc.canonical.gens;
    r.diameter = k;
    r.iso_class = static_cast<int>(i + 1);
    r.provenance = "search (" + std::to_string(wc.members.size()) + " witnesses)";
    recs.push_back(std::move(r));
  }
  emit_records(recs, opt);
}

// ---------------------------------------------------------------- spectrum

void run_spectrum(Int n, const std::vector<Int>& gens, const Options& opt) {
  if (n > kSpectrumGate && !opt.allow_long)
    ddc::fail(ddc::errc::bad_parameter, "spectrum on " + std::to_string(n) +
                                            " vertices exceeds the desk scale gate; pass "
                                            "--allow-long");
  auto g = ddc::make_graph(n, gens);
  ddc::SpectrumOptions so;
  so.max_order = std::max(so.max_order, n);
  ddc::Inertia in = ddc::inertia(ddc::spectrum(g, so));

  if (opt.format == "json") {
    njson j;
    j["n"] = n;
    j["degree"] = g.degree();
    j["generators"] = g.gens.gens;
    j["positive"] = in.positive;
    j["zero"] = in.zero;
    j["negative"] = in.negative;
    std::cout << j.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,degree,generators,positive,zero,negative\n";
    std::cout << n << "," << g.degree() << "," << csv_cell(join(g.gens.gens)) << ","
              << in.positive << "," << in.zero << "," << in.negative << "\n";
  } else {
    std::cout << "n=" << n << " degree=" << g.degree() << " inertia=(" << in.positive << ","
              << in.zero << "," << in.negative << ")\n";
  }
}

// ---------------------------------------------------------------------- iso

void run_iso(Int n, const std::vector<Int>& set1, const std::vector<Int>& set2,
             const Options& opt) {
  auto a = ddc::make_generator_set(n, set1);
  auto b = ddc::make_generator_set(n, set2);
  std::optional<Int> m = ddc::multiplier_isomorphic(a, b);

  if (opt.format == "json") {
    njson j;
    j["n"] = n;
    j["set1"] = a.gens;
    j["set2"] = b.gens;
    if (m)
      j["multiplier"] = *m;
    else
      j["multiplier"] = nullptr;
    std::cout << j.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "n,set1,set2,multiplier\n";
    std::cout << n << "," << csv_cell(join(a.gens)) << "," << csv_cell(join(b.gens)) << ","
              << (m ? std::to_string(*m) : "") << "\n";
  } else if (m) {
    std::cout << "multiplier=" << *m << "\n";
  } else {
    std::cout << "no multiplier equivalence\n";
  }
}

// ------------------------------------------------------------------ lattice

const char* method_name(ddc::CoveringMethod m) {
  return m == ddc::CoveringMethod::quotient_bfs ? "quotient_bfs" : "direct_lattice";
}

void run_lattice(Int k, bool verify, const std::string& method, const Options& opt) {
  bool covering_requested = verify || !method.empty();
  if (covering_requested && k > kLatticeVerifyGate && !opt.allow_long)
    ddc::fail(ddc::errc::bad_parameter,
              "covering check at k = " + std::to_string(k) +
                  " exceeds the desk scale gate (k <= " + std::to_string(kLatticeVerifyGate) +
                  "); pass --allow-long");

  ddc::Lattice lat = ddc::lattice_basis(k);
  auto mults = ddc::quotient_multipliers(lat);
  std::optional<ddc::CoveringCertificate> cert;
  if (verify)
    cert = ddc::verify_covering(k);
  else if (method == "quotient")
    cert = ddc::covering_check(k, ddc::CoveringMethod::quotient_bfs);
  else if (method == "direct")
    cert = ddc::covering_check(k, ddc::CoveringMethod::direct_lattice);

  if (opt.format == "json") {
    njson j;
    j["k"] = k;
    j["parity"] = lat.even ? "even" : "odd";
    j["a"] = lat.a;
    j["index"] = lat.index;
    j["basis"] = lat.basis;
    j["multipliers"] = mults;
    if (cert) {
      njson c;
      c["method"] = method_name(cert->method);
      c["covered"] = cert->covered;
      c["detail"] = cert->detail;
      j["covering"] = c;
    } else {
      j["covering"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return;
  }
  if (opt.format == "csv") {
    std::cout << "k,parity,a,index,m2,m3,m4,covered,method,detail\n";
    std::cout << k << "," << (lat.even ? "even" : "odd") << "," << lat.a << "," << lat.index
              << "," << mults[0] << "," << mults[1] << "," << mults[2];
    if (cert)
      std::cout << "," << (cert->covered ? "true" : "false") << "," << method_name(cert->method)
                << "," << cert->detail << "\n";
    else
      std::cout << ",,,\n";
    return;
  }
  std::cout << "k=" << k << " parity=" << (lat.even ? "even" : "odd") << " a=" << lat.a
            << " index=" << lat.index << "\n";
  for (int i = 0; i < 4; ++i) {
    const auto& v = lat.basis[i];
    std::cout << "v" << i + 1 << "=(" << v[0] << "," << v[1] << "," << v[2] << "," << v[3]
              << ")\n";
  }
  std::cout << "multipliers=1," << mults[0] << "," << mults[1] << "," << mults[2] << "\n";
  if (cert)
    std::cout << "covering=" << (cert->covered ? "true" : "false")
              << " method=" << method_name(cert->method) << " detail=" << cert->detail << "\n";
}

// -------------------------------------------------------------------- table

void run_table(const std::string& name, bool list, const Options& opt) {
  if (list) {
    for (const auto& n : ddc::table_names()) std::cout << n << "\n";
    return;
  }
  ddc::TableOptions to;
  to.allow_long = opt.allow_long;
  if (opt.format == "json")
    to.format = ddc::TableFormat::json;
  else if (opt.format == "csv")
    to.format = ddc::TableFormat::csv;
  std::cout << ddc::render_table(name, to);
}

// Parses "7" or "2..16" into an inclusive range.
std::pair<Int, Int> parse_range(const std::string& s) {
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      Int k = std::stoll(s);
      return {k, k};
    }
    return {std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2))};
  } catch (const std::exception&) {
    ddc::fail(ddc::errc::bad_parameter, "cannot parse diameter range '" + s + "'");
  }
}

int exit_for(ddc::errc c) {
  switch (c) {
    case ddc::errc::verification_failed:
    case ddc::errc::invariant_violated:
    case ddc::errc::methods_disagree:
    case ddc::errc::unstable_classification:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circulant graphs in the degree-diameter problem"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads,
                 "worker threads (0 = all cores; DDC_THREADS as fallback)");
  app.add_flag("--allow-long", opt.allow_long, "permit computations beyond desk scale");

  auto* cmd_diam = app.add_subcommand("diameter", "BFS diameter of one circulant graph");
  Int diam_n = 0;
  std::vector<Int> diam_gens;
  cmd_diam->add_option("--n", diam_n, "number of vertices")->required();
  cmd_diam->add_option("--gens", diam_gens, "generators, comma separated")
      ->required()
      ->delimiter(',');
  cmd_diam->callback([&] { run_diameter(diam_n, diam_gens, opt); });

  auto* cmd_con = app.add_subcommand("construct", "build the record graphs for a degree and diameter");
  Int con_d = 0, con_k = 0;
  bool con_all = false, con_noverify = false;
  cmd_con->add_option("--degree", con_d)->required();
  cmd_con->add_option("--k", con_k, "diameter")->required();
  cmd_con->add_flag("--all-variants", con_all, "every published generator set, not one per class");
  cmd_con->add_flag("--no-verify", con_noverify, "skip the BFS diameter check");
  cmd_con->callback([&] { run_construct(con_d, con_k, con_all, con_noverify, opt); });

  auto* cmd_bounds = app.add_subcommand("bounds", "lower bound, largest known order, upper bound");
  Int bounds_d = 0;
  std::string bounds_k;
  cmd_bounds->add_option("--degree", bounds_d)->required();
  cmd_bounds->add_option("--k", bounds_k, "diameter or inclusive range a..b")->required();
  cmd_bounds->callback([&] {
    auto [lo, hi] = parse_range(bounds_k);
    run_bounds(bounds_d, lo, hi, opt);
  });

  auto* cmd_search = app.add_subcommand("search", "exhaustive extremal order search");
  Int search_d = 0, search_k = 0;
  std::optional<Int> search_ceiling;
  bool search_first = false, search_noprune = false;
  std::string search_ckpt;
  cmd_search->add_option("--degree", search_d)->required();
  cmd_search->add_option("--k", search_k, "diameter")->required();
  cmd_search->add_option("--ceiling", search_ceiling, "start order (default: sphere bound)");
  cmd_search->add_flag("--first-witness", search_first, "stop at the first graph found");
  cmd_search->add_flag("--no-prune", search_noprune, "test every set, not orbit representatives");
  cmd_search->add_option("--checkpoint", search_ckpt, "resumable progress file");
  cmd_search->callback([&] {
    run_search(search_d, search_k, search_ceiling, search_first, search_noprune, search_ckpt, opt);
  });

  auto* cmd_spec = app.add_subcommand("spectrum", "eigenvalue inertia of one circulant graph");
  Int spec_n = 0;
  std::vector<Int> spec_gens;
  cmd_spec->add_option("--n", spec_n)->required();
  cmd_spec->add_option("--gens", spec_gens)->required()->delimiter(',');
  cmd_spec->callback([&] { run_spectrum(spec_n, spec_gens, opt); });

  auto* cmd_iso = app.add_subcommand("iso", "multiplier equivalence of two generator sets");
  Int iso_n = 0;
  std::vector<Int> iso_a, iso_b;
  cmd_iso->add_option("--n", iso_n)->required();
  cmd_iso->add_option("--set1", iso_a)->required()->delimiter(',');
  cmd_iso->add_option("--set2", iso_b)->required()->delimiter(',');
  cmd_iso->callback([&] { run_iso(iso_n, iso_a, iso_b, opt); });

  auto* cmd_lat = app.add_subcommand("lattice", "degree-8 quotient lattice and covering check");
  Int lat_k = 0;
  bool lat_verify = false;
  std::string lat_method;
  cmd_lat->add_option("--k", lat_k, "diameter")->required();
  cmd_lat->add_flag("--verify", lat_verify, "run the covering check by every applicable method");
  cmd_lat->add_option("--method", lat_method, "covering check by one method")
      ->check(CLI::IsMember({"quotient", "direct"}));
  cmd_lat->callback([&] { run_lattice(lat_k, lat_verify, lat_method, opt); });

  auto* cmd_table = app.add_subcommand("table", "render a reference table");
  std::string table_name;
  bool table_list = false;
  cmd_table->add_option("--name", table_name, "table name (see --list)");
  cmd_table->add_flag("--list", table_list, "list table names");
  cmd_table->callback([&] {
    if (!table_list && table_name.empty())
      ddc::fail(ddc::errc::bad_parameter, "table requires --name or --list");
    run_table(table_name, table_list, opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ddc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
