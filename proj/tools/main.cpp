// mopiso command line: generate, solve, verify, and render maximal
// outerplanar instances.
//
// Exit codes: 0 success, 1 a checked property is false, 2 bad input,
// 3 internal verification failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mopiso/error.hpp"
#include "mopiso/families.hpp"
#include "mopiso/io.hpp"
#include "mopiso/isolation.hpp"
#include "mopiso/mop.hpp"
#include "mopiso/oracle.hpp"
#include "mopiso/polygon.hpp"
#include "mopiso/rng.hpp"
#include "mopiso/svg.hpp"

namespace {

using namespace mopiso;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerificationFailure = 3;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

Mop load_mop(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_mop_auto(in);
}

std::vector<int> load_set(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_vertex_set(in);
}

SimplePolygon load_poly(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_poly1(in);
}

std::string set_to_string(const std::vector<int>& set) {
  std::ostringstream s;
  for (size_t i = 0; i < set.size(); ++i) {
    if (i) s << ' ';
    s << set[i];
  }
  return s.str();
}

// ---------------------------------------------------------------- gen ----

struct GenOptions {
  std::string family;
  int n = 0;
  int k = 0;
  int t = 1;
  int p = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool json = false;
};

int run_gen(const GenOptions& opt) {
  if (opt.family == "spiral") {
    SimplePolygon poly = spiral_gallery(opt.t, opt.k);
    std::ostringstream s;
    write_poly1(s, poly);
    emit(opt.out, s.str());
    return kExitOk;
  }
  std::optional<Mop> g;
  if (opt.family == "fan") {
    g = fan(opt.n);
  } else if (opt.family == "T") {
    g = family_T(opt.k, opt.t);
  } else if (opt.family == "A") {
    g = family_A(opt.k, opt.p);
  } else if (opt.family == "H") {
    g = family_H(opt.k, opt.t);
  } else if (opt.family == "R") {
    g = family_R(opt.k);
  } else if (opt.family == "S") {
    g = family_S(opt.k, opt.t);
  } else if (opt.family == "M") {
    g = family_M(opt.p);
  } else if (opt.family == "random") {
    g = random_mop(opt.n, opt.seed);
  } else {
    throw Error(Errc::BadParams, "unknown family \"" + opt.family + "\"");
  }
  std::string content;
  if (opt.json) {
    content = mop_to_json(*g) + "\n";
  } else {
    std::ostringstream s;
    write_mop1(s, *g);
    content = s.str();
  }
  emit(opt.out, content);
  return kExitOk;
}

// ------------------------------------------------------------ isolate ----

struct IsolateOptions {
  std::string file;
  int k = 0;
  std::string algo = "best";
  std::string dominate;  // "", "third", "half"
  int limit = 24;
  bool trace = false;
  bool json = false;
};

nlohmann::json solution_to_json(const BoundedSolution& sol, int n, int n2) {
  nlohmann::json j;
  j["n"] = n;
  j["n2"] = n2;
  j["k"] = sol.k;
  j["algorithm"] = bound_name_str(sol.bound_name);
  j["set"] = sol.set;
  j["size"] = sol.size();
  j["bound"] = sol.bound_value.str();
  j["bound_applicable"] = sol.bound_applicable;
  j["bound_respected"] = sol.bound_respected;
  return j;
}

int run_isolate(const IsolateOptions& opt) {
  Mop g = load_mop(opt.file);
  const int n = g.order();
  const int n2 = static_cast<int>(degree2_vertices(g).size());

  if (opt.algo == "exact") {
    ExactResult r = opt.dominate.empty() ? exact_isolation_number(g, opt.k, opt.limit)
                                         : exact_domination_number(g, opt.limit);
    if (opt.json) {
      nlohmann::json j;
      j["n"] = n;
      j["n2"] = n2;
      j["k"] = opt.dominate.empty() ? opt.k : -1;
      j["algorithm"] = "EXACT";
      j["set"] = r.witness;
      j["size"] = r.value;
      j["explored"] = r.explored;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "algorithm: EXACT\n"
                << "set: " << set_to_string(r.witness) << "\n"
                << "size: " << r.value << "\n"
                << "explored: " << r.explored << "\n";
    }
    return kExitOk;
  }

  BoundedSolution sol;
  if (!opt.dominate.empty()) {
    if (opt.dominate == "third") {
      sol = dominate_third(g);
    } else if (opt.dominate == "half") {
      sol = dominate_half_minus(g);
    } else {
      throw Error(Errc::BadParams, "unknown domination rule \"" + opt.dominate + "\"");
    }
  } else if (opt.algo == "order") {
    sol = isolate_order(g, opt.k);
  } else if (opt.algo == "plus") {
    sol = isolate_order_plus_n2(g, opt.k);
  } else if (opt.algo == "minus") {
    sol = isolate_order_minus_n2(g, opt.k);
  } else if (opt.algo == "best") {
    sol = isolate_best(g, opt.k);
  } else {
    throw Error(Errc::BadParams, "unknown algorithm \"" + opt.algo + "\"");
  }

  // Independent re-check before reporting success.
  bool verified;
  int residual = -1;
  if (sol.k < 0) {
    verified = is_dominating(g, sol.set);
  } else {
    IsolationCheck check = is_isolating(g, sol.set, sol.k);
    verified = check.isolating;
    residual = check.residual_max_degree;
  }
  if (!verified) {
    std::cerr << "error: emitted set failed re-verification\n";
    return kExitVerificationFailure;
  }

  if (opt.json) {
    nlohmann::json j = solution_to_json(sol, n, n2);
    j["verified"] = true;
    if (sol.k >= 0) j["residual_max_degree"] = residual;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "algorithm: " << bound_name_str(sol.bound_name) << "\n"
              << "set: " << set_to_string(sol.set) << "\n"
              << "size: " << sol.size() << "\n"
              << "bound: " << sol.bound_value.str()
              << (sol.bound_applicable ? "" : " (not applicable)") << "\n"
              << "verified: yes\n"
              << "bound respected: " << (sol.bound_respected ? "yes" : "no") << "\n";
    if (opt.trace) {
      for (const TraceStep& step : sol.trace) {
        std::cout << "trace: depth=" << step.depth << " " << step.tag;
        if (step.a >= 0) std::cout << " a=" << step.a;
        if (step.b >= 0) std::cout << " b=" << step.b;
        if (step.apex >= 0) std::cout << " apex=" << step.apex;
        std::cout << "\n";
      }
    }
  }
  return sol.bound_respected ? kExitOk : kExitPropertyFalse;
}

// ------------------------------------------------------------- verify ----

int run_verify(const std::string& mop_file, const std::string& set_file, int k,
               bool dominate) {
  Mop g = load_mop(mop_file);
  std::vector<int> set = load_set(set_file);
  for (int v : set) g.check_vertex(v);
  if (dominate) {
    bool ok = is_dominating(g, set);
    std::cout << "dominating: " << (ok ? "yes" : "no") << "\n";
    return ok ? kExitOk : kExitPropertyFalse;
  }
  IsolationCheck check = is_isolating(g, set, k);
  std::cout << "isolating: " << (check.isolating ? "yes" : "no") << "\n"
            << "residual max degree: " << check.residual_max_degree << "\n";
  return check.isolating ? kExitOk : kExitPropertyFalse;
}

// ------------------------------------------------------------- oracle ----

int run_oracle(const std::string& file, int k, bool dominate, int limit) {
  Mop g = load_mop(file);
  ExactResult r = dominate ? exact_domination_number(g, limit)
                           : exact_isolation_number(g, k, limit);
  std::cout << (dominate ? "domination number: " : "isolation number: ") << r.value
            << "\n"
            << "witness: " << set_to_string(r.witness) << "\n"
            << "explored: " << r.explored << "\n";
  return kExitOk;
}

// ------------------------------------------------------------ gallery ----

struct GalleryOptions {
  int t = 0;
  int k = 0;
  std::string poly_file;
  std::string svg_path;
};

int run_gallery(const GalleryOptions& opt) {
  SimplePolygon poly = opt.poly_file.empty() ? spiral_gallery(opt.t, opt.k)
                                             : load_poly(opt.poly_file);
  GuardCertificate cert = place_guards(poly, opt.k);
  Mop tri = triangulate(poly);
  auto [covered, first_bad] = verify_window_coverage(tri, cert.guards, cert.k);

  std::cout << "corners: " << poly.size() << "\n"
            << "guards: " << set_to_string(cert.guards) << "\n"
            << "guard count: " << cert.guards.size() << "\n"
            << "base size: " << cert.base_size << "\n"
            << "augmentations: " << cert.augmentations << "\n"
            << "windows covered: " << (covered ? "yes" : "no") << "\n";
  if (!covered) std::cout << "first failing window: " << first_bad << "\n";

  if (!opt.svg_path.empty()) {
    emit(opt.svg_path, render_svg(poly, &tri, cert.guards));
  }
  return covered ? kExitOk : kExitPropertyFalse;
}

// -------------------------------------------------------------- bench ----

struct BenchOptions {
  std::vector<std::string> families{"random"};
  int nmin = 8;
  int nmax = 20;
  int kmin = 0;
  int kmax = 3;
  int trials = 100;
  std::uint64_t seed = 1;
  int oracle_limit = 0;  // 0 disables the oracle column
  std::string out;
};

struct BenchRow {
  std::string id;
  int n = 0;
  int n2 = 0;
  int k = 0;
  std::string algorithm;
  int size = 0;
  std::string bound;
  bool bound_respected = true;
  std::string oracle;  // empty when not computed
  double elapsed_ms = 0.0;
};

void bench_instance(const std::string& id, const Mop& g, int k, int oracle_limit,
                    std::vector<BenchRow>& rows, bool& any_violation) {
  const int n = g.order();
  const int n2 = static_cast<int>(degree2_vertices(g).size());

  std::string oracle_value;
  if (oracle_limit > 0 && n <= oracle_limit) {
    oracle_value = std::to_string(exact_isolation_number(g, k, oracle_limit).value);
  }

  struct Algo {
    const char* name;
    bool applicable;
    BoundedSolution (*run)(const Mop&, int);
  };
  const Algo algos[] = {
      {"order", n >= k + 4, +[](const Mop& g2, int k2) { return isolate_order(g2, k2); }},
      {"plus", true,
       +[](const Mop& g2, int k2) { return isolate_order_plus_n2(g2, k2); }},
      {"minus", k >= 1 && n >= 2 * k + 3,
       +[](const Mop& g2, int k2) { return isolate_order_minus_n2(g2, k2); }},
  };
  for (const Algo& algo : algos) {
    if (!algo.applicable) continue;
    auto start = std::chrono::steady_clock::now();
    BoundedSolution sol = algo.run(g, k);
    auto stop = std::chrono::steady_clock::now();
    BenchRow row;
    row.id = id;
    row.n = n;
    row.n2 = n2;
    row.k = k;
    row.algorithm = algo.name;
    row.size = sol.size();
    row.bound = sol.bound_value.str();
    row.bound_respected = sol.bound_respected;
    row.oracle = oracle_value;
    row.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop -
                                                                              start)
            .count();
    if (!row.bound_respected) any_violation = true;
    rows.push_back(std::move(row));
  }
}

int run_bench(const BenchOptions& opt) {
  require(opt.nmin >= 3 && opt.nmax >= opt.nmin, Errc::BadParams,
          "need 3 <= nmin <= nmax");
  require(opt.kmin >= 0 && opt.kmax >= opt.kmin, Errc::BadParams,
          "need 0 <= kmin <= kmax");
  require(opt.trials >= 0, Errc::BadParams, "trials must be nonnegative");

  std::vector<BenchRow> rows;
  bool any_violation = false;
  SplitMix64 rng(opt.seed);

  for (const std::string& family : opt.families) {
    if (family == "random") {
      for (int k = opt.kmin; k <= opt.kmax; ++k) {
        for (int n = opt.nmin; n <= opt.nmax; ++n) {
          for (int trial = 0; trial < opt.trials; ++trial) {
            std::uint64_t instance_seed = rng.next();
            std::ostringstream id;
            id << "random-n" << n << "-k" << k << "-t" << trial;
            bench_instance(id.str(), random_mop(n, instance_seed), k,
                           opt.oracle_limit, rows, any_violation);
          }
        }
      }
    } else if (family == "T" || family == "A" || family == "H" || family == "S" ||
               family == "M") {
      // Small fixed parameter sweeps; the point is the size column, so the
      // n range flags are not consulted here.
      for (int k = opt.kmin; k <= opt.kmax; ++k) {
        for (int t = 1; t <= 3; ++t) {
          std::optional<Mop> g;
          std::ostringstream id;
          if (family == "T") {
            g = family_T(k, t);
            id << "T-k" << k << "-t" << t;
          } else if (family == "A") {
            if (t > 1) continue;  // order grows as 2(k+4)(k+5)t
            g = family_A(k, t);
            id << "A-k" << k << "-p" << t;
          } else if (family == "H") {
            int lo = (k + 5) / 2, hi = k + 4;
            if (t < lo || t > hi) continue;
            g = family_H(k, t);
            id << "H-k" << k << "-t" << t;
          } else if (family == "S") {
            if (k < 1) continue;
            g = family_S(k, t);
            id << "S-k" << k << "-t" << t;
          } else {
            if (k != opt.kmin) continue;  // M takes no k; emit once
            g = family_M(t + 1);
            id << "M-p" << (t + 1);
          }
          bench_instance(id.str(), *g, family == "M" ? 0 : k, opt.oracle_limit, rows,
                         any_violation);
        }
      }
    } else {
      throw Error(Errc::BadParams, "unknown bench family \"" + family + "\"");
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) { return a.id < b.id; });

  std::ostringstream csv;
  csv << "id,n,n2,k,algorithm,size,bound,bound_respected,oracle,elapsed_ms\n";
  double max_ratio = 0.0;
  std::string max_ratio_id;
  for (const BenchRow& row : rows) {
    csv << row.id << ',' << row.n << ',' << row.n2 << ',' << row.k << ','
        << row.algorithm << ',' << row.size << ',' << row.bound << ','
        << (row.bound_respected ? "true" : "false") << ',' << row.oracle << ','
        << row.elapsed_ms << "\n";
    // bound strings are exact rationals "p/q" or integers
    double bound_value;
    size_t slash = row.bound.find('/');
    if (slash == std::string::npos) {
      bound_value = std::stod(row.bound);
    } else {
      bound_value =
          std::stod(row.bound.substr(0, slash)) / std::stod(row.bound.substr(slash + 1));
    }
    if (bound_value > 0) {
      double ratio = row.size / bound_value;
      if (ratio > max_ratio) {
        max_ratio = ratio;
        max_ratio_id = row.id;
      }
    }
  }
  csv << "# max size/bound ratio: " << max_ratio << " at " << max_ratio_id << "\n";
  emit(opt.out, csv.str());
  return any_violation ? kExitPropertyFalse : kExitOk;
}

// ---------------------------------------------------------------- svg ----

int run_svg(const std::string& file, const std::string& set_file, bool as_poly,
            const std::string& out) {
  std::vector<int> highlight;
  if (!set_file.empty()) highlight = load_set(set_file);
  std::string content;
  if (as_poly) {
    SimplePolygon poly = load_poly(file);
    Mop tri = triangulate(poly);
    content = render_svg(poly, &tri, highlight);
  } else {
    Mop g = load_mop(file);
    for (int v : highlight) g.check_vertex(v);
    content = render_svg(g, highlight);
  }
  emit(out, content);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isolating sets, domination, and guard placement on maximal "
               "outerplanar graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand(
      "gen", "Generate an instance (MOP1/POLY1/JSON) from a named family");
  cmd_gen->add_option("--family", gen.family, "fan|T|A|H|R|S|M|random|spiral")
      ->required();
  cmd_gen->add_option("--n", gen.n, "order (fan, random)");
  cmd_gen->add_option("--k", gen.k, "family parameter k");
  cmd_gen->add_option("--t", gen.t, "family parameter t");
  cmd_gen->add_option("--p", gen.p, "family parameter p");
  cmd_gen->add_option("--seed", gen.seed, "random seed");
  cmd_gen->add_option("--out", gen.out, "output file (default stdout)");
  cmd_gen->add_flag("--json", gen.json, "emit the JSON mirror instead of MOP1");

  IsolateOptions iso;
  CLI::App* cmd_isolate = app.add_subcommand(
      "isolate", "Compute an isolating (or dominating) set with its bound");
  cmd_isolate->add_option("file", iso.file, "MOP1 or JSON input")->required();
  cmd_isolate->add_option("--k", iso.k, "isolation parameter")->required();
  cmd_isolate->add_option("--algo", iso.algo, "order|plus|minus|best|exact");
  cmd_isolate->add_option("--dominate", iso.dominate, "third|half");
  cmd_isolate->add_option("--limit", iso.limit, "oracle size cap (algo=exact)");
  cmd_isolate->add_flag("--trace", iso.trace, "print recursion steps");
  cmd_isolate->add_flag("--json", iso.json, "emit one JSON line");

  std::string verify_mop, verify_set;
  int verify_k = 0;
  bool verify_dominate = false;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Check a vertex set against a mop");
  cmd_verify->add_option("file", verify_mop, "MOP1 or JSON input")->required();
  cmd_verify->add_option("set", verify_set, "vertex set file")->required();
  cmd_verify->add_option("--k", verify_k, "isolation parameter");
  cmd_verify->add_flag("--dominate", verify_dominate, "check domination instead");

  std::string oracle_file;
  int oracle_k = 0;
  bool oracle_dominate = false;
  int oracle_limit = 24;
  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "Exact minimum by exhaustive search");
  cmd_oracle->add_option("file", oracle_file, "MOP1 or JSON input")->required();
  cmd_oracle->add_option("--k", oracle_k, "isolation parameter");
  cmd_oracle->add_flag("--dominate", oracle_dominate, "domination number instead");
  cmd_oracle->add_option("--limit", oracle_limit, "refuse mops larger than this");

  GalleryOptions gal;
  CLI::App* cmd_gallery = app.add_subcommand(
      "gallery", "Guard placement on a spiral gallery or a POLY1 polygon");
  cmd_gallery->add_option("--t", gal.t, "spiral unit count");
  cmd_gallery->add_option("--k", gal.k, "relaxation parameter")->required();
  cmd_gallery->add_option("--poly", gal.poly_file, "POLY1 input instead of --t");
  cmd_gallery->add_option("--svg", gal.svg_path, "write an SVG rendering here");

  BenchOptions bench;
  CLI::App* cmd_bench =
      app.add_subcommand("bench", "Batch bound verification, CSV output");
  cmd_bench->add_option("--families", bench.families,
                        "any of: random T A H S M (repeatable)");
  cmd_bench->add_option("--nmin", bench.nmin, "smallest random order");
  cmd_bench->add_option("--nmax", bench.nmax, "largest random order");
  cmd_bench->add_option("--kmin", bench.kmin, "smallest k");
  cmd_bench->add_option("--kmax", bench.kmax, "largest k");
  cmd_bench->add_option("--trials", bench.trials, "random instances per (n,k)");
  cmd_bench->add_option("--seed", bench.seed, "master seed");
  cmd_bench->add_option("--oracle-limit", bench.oracle_limit,
                        "fill the oracle column for n up to this (0 = off)");
  cmd_bench->add_option("--out", bench.out, "CSV file (default stdout)");

  std::string svg_file, svg_set, svg_out;
  bool svg_poly = false;
  CLI::App* cmd_svg = app.add_subcommand("svg", "Render an instance to SVG");
  cmd_svg->add_option("file", svg_file, "MOP1/JSON input (or POLY1 with --poly)")
      ->required();
  cmd_svg->add_option("--set", svg_set, "vertex set file to highlight");
  cmd_svg->add_flag("--poly", svg_poly, "input is a POLY1 polygon");
  cmd_svg->add_option("--out", svg_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_isolate->parsed()) return run_isolate(iso);
    if (cmd_verify->parsed())
      return run_verify(verify_mop, verify_set, verify_k, verify_dominate);
    if (cmd_oracle->parsed())
      return run_oracle(oracle_file, oracle_k, oracle_dominate, oracle_limit);
    if (cmd_gallery->parsed()) return run_gallery(gal);
    if (cmd_bench->parsed()) return run_bench(bench);
    if (cmd_svg->parsed())
      return run_svg(svg_file, svg_set, svg_poly, svg_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::VerificationFailure ? kExitVerificationFailure
                                                 : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
