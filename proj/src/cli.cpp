#include "ehrhart/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ehrhart/bounds.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/json_io.hpp"
#include "ehrhart/parallel.hpp"
#include "ehrhart/surface.hpp"
#include "ehrhart/transforms.hpp"

namespace ehrhart::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;      // I/O, parse and input errors
constexpr int kExitViolation = 2;  // theorem violation or broken invariant
constexpr int kExitInadmissible = 3;

struct Options {
  std::string expr;
  std::string file;
  std::string suite;
  std::string out;
  std::string format = "json";
  long k = 1;
  bool strict = false;
  long random_n = 0;
  int dim = 0;
  int box = 2;
  std::uint64_t seed = 0;
  bool has_seed = false;
  long a1 = -1, a2 = -1;
};

// splitmix64 step, decorrelates per-sample seeds
std::uint64_t mix_seed(std::uint64_t s, std::uint64_t i) {
  std::uint64_t z = s + 0x9E3779B97F4A7C15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

VPolytope polytope_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad polytope json in '" + path + "': " + e.what());
  }
  return polytope_from_json(j);
}

struct Source {
  std::string label;
  VPolytope poly;
};

VPolytope single_source(const Options& o, std::string* label) {
  const bool has_expr = !o.expr.empty();
  const bool has_file = !o.file.empty();
  if (has_expr == has_file)
    throw std::invalid_argument("exactly one of --expr/--file is required");
  if (has_expr) {
    ExprPtr e = parse_expr(o.expr);
    *label = expr_to_string(*e);
    return build(e);
  }
  *label = o.file;
  return polytope_from_file(o.file);
}

enum class SymmetricMode { Never, Always, Alternate };

std::vector<Source> make_sources(const Options& o, SymmetricMode sym) {
  std::vector<Source> sources;
  const bool has_random = o.random_n > 0;
  if ((!o.expr.empty()) + (!o.file.empty()) + has_random != 1)
    throw std::invalid_argument(
        "exactly one of --expr/--file/--random is required");
  if (!has_random) {
    Source s;
    s.poly = single_source(o, &s.label);
    sources.push_back(std::move(s));
    return sources;
  }
  if (!o.has_seed)
    throw std::invalid_argument("--seed is mandatory with --random");
  if (o.dim < 2) throw std::invalid_argument("--dim (>= 2) is mandatory with --random");
  const int count = o.dim + 4;
  for (long i = 0; i < o.random_n; ++i) {
    bool symmetric = sym == SymmetricMode::Always ||
                     (sym == SymmetricMode::Alternate && i % 2 == 1);
    Source s;
    s.label = "random[" + std::to_string(i) + "]";
    s.poly = random_lattice_polytope(o.dim, o.box, count, mix_seed(o.seed, i),
                                     symmetric);
    sources.push_back(std::move(s));
  }
  return sources;
}

std::vector<IntVec> random_cross_generators(int dim, int box,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(box) + 1;
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<IntVec> v(dim, IntVec(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        v[i][j] = static_cast<std::int64_t>(rng() % span) - box;
    if (det_exact(mat_from_rows(v)) != 0) return v;
  }
  throw std::runtime_error("could not sample independent generators");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct Document {
  Json json;
  std::string csv;
  int exit_code = kExitOk;
};

Document cmd_construct(const Options& o) {
  Document doc;
  std::string label;
  VPolytope p = single_source(o, &label);
  doc.json["command"] = "construct";
  doc.json["source"] = label;
  doc.json["polytope"] = polytope_to_json(p);
  std::ostringstream csv;
  for (const IntVec& g : p.generators) {
    for (std::size_t j = 0; j < g.size(); ++j)
      csv << (j ? "," : "") << g[j];
    csv << '\n';
  }
  doc.csv = csv.str();
  return doc;
}

Document cmd_count(const Options& o) {
  Document doc;
  std::string label;
  VPolytope p = single_source(o, &label);
  if (o.k < 0) throw std::invalid_argument("--k must be >= 0");
  Int n = count(p, o.k, o.strict);
  doc.json["command"] = "count";
  doc.json["source"] = label;
  doc.json["dim"] = p.dim;
  doc.json["k"] = o.k;
  doc.json["strict"] = o.strict;
  doc.json["count"] = int_to_json(n);
  std::ostringstream csv;
  csv << "k,strict,count\n" << o.k << ',' << (o.strict ? 1 : 0) << ',' << n << '\n';
  doc.csv = csv.str();
  return doc;
}

Document cmd_hstar(const Options& o) {
  Document doc;
  std::string label;
  VPolytope p = single_source(o, &label);
  HRep h = facets(p);
  const int d = p.dim;
  std::vector<Int> counts = dilate_counts(p, h, d);
  EhrhartPoly g = ehrhart_poly_from_counts(counts);
  HStar hs = hstar_from_count_vector(counts);
  Int interior = count(p, h, 1, true);

  // consistency gates before emission
  if (hs.coeffs[0] != 1) throw std::logic_error("hstar: a_0 != 1");
  if (hs.coeffs[1] != counts[1] - (d + 1))
    throw std::logic_error("hstar: a_1 != G(P) - (d+1)");
  if (hs.coeffs[d] != interior)
    throw std::logic_error("hstar: a_d != G(int P)");
  if (volume(hs) != g.coeffs[d])
    throw std::logic_error("hstar: sum a_i != d! vol");

  doc.json["command"] = "hstar";
  doc.json["source"] = label;
  doc.json["dim"] = d;
  Json gj = Json::array();
  for (const Rat& c : g.coeffs) gj.push_back(rat_to_string(c));
  doc.json["g"] = std::move(gj);
  doc.json["a"] = hstar_to_json(hs);
  doc.json["deg"] = hs.degree();
  doc.json["vol"] = rat_to_string(g.coeffs[d]);
  doc.json["G"] = int_to_json(counts[1]);
  doc.json["G_int"] = int_to_json(interior);

  std::ostringstream csv;
  csv << "quantity,index,exact,decimal\n";
  for (int i = 0; i <= d; ++i)
    csv << "g," << i << ',' << g.coeffs[i] << ',' << rat_to_decimal(g.coeffs[i])
        << '\n';
  for (int i = 0; i <= d; ++i)
    csv << "a," << i << ',' << hs.coeffs[i] << ',' << hs.coeffs[i] << '\n';
  csv << "deg,," << hs.degree() << ',' << hs.degree() << '\n';
  csv << "vol,," << g.coeffs[d] << ',' << rat_to_decimal(g.coeffs[d]) << '\n';
  csv << "G,," << counts[1] << ',' << counts[1] << '\n';
  csv << "G_int,," << interior << ',' << interior << '\n';
  doc.csv = csv.str();
  return doc;
}

Document cmd_surface(const Options& o) {
  Document doc;
  std::string label;
  VPolytope p = single_source(o, &label);
  HRep h = facets(p);
  std::vector<FacetArea> areas = facet_areas(p, h);
  Rat lat = 0;
  SqrtSum euc;
  for (const FacetArea& f : areas) {
    lat += f.lattice_area;
    euc += f.euclid_area;
  }
  lat /= 2;

  doc.json["command"] = "surface";
  doc.json["source"] = label;
  doc.json["dim"] = p.dim;
  doc.json["euclid_surface"] = sqrtsum_with_decimal(euc);
  doc.json["lattice_surface"] = rat_to_string(lat);
  Json fj = Json::array();
  for (const FacetArea& f : areas) fj.push_back(facet_area_to_json(f));
  doc.json["facets"] = std::move(fj);

  std::ostringstream csv;
  csv << "normal,offset,k,lattice_area,lattice_area_decimal,euclid_decimal\n";
  for (const FacetArea& f : areas) {
    std::ostringstream n;
    for (std::size_t j = 0; j < f.facet.normal.size(); ++j)
      n << (j ? " " : "") << f.facet.normal[j];
    csv << csv_escape(n.str()) << ',' << f.facet.offset << ',' << f.k << ','
        << f.lattice_area << ',' << rat_to_decimal(f.lattice_area) << ','
        << f.euclid_area.value().str(12, std::ios_base::fixed) << '\n';
  }
  csv << "total,," << "," << lat << ',' << rat_to_decimal(lat) << ','
      << euc.value().str(12, std::ios_base::fixed) << '\n';
  doc.csv = csv.str();
  return doc;
}

Document cmd_witness(const Options& o) {
  Document doc;
  if (o.a1 < 0 || o.a2 < 0)
    throw std::invalid_argument("--a1 and --a2 are required");
  VPolytope p = degree2_witness(o.a1, o.a2);  // throws on inadmissible pairs
  HStar hs = hstar_from_counts(p);
  std::vector<Int> expect(p.dim + 1, Int(0));
  expect[0] = 1;
  expect[1] = o.a1;
  expect[2] = o.a2;
  if (hs.coeffs != expect)
    throw std::logic_error("witness verification failed: h* mismatch");

  doc.json["command"] = "witness";
  doc.json["a1"] = o.a1;
  doc.json["a2"] = o.a2;
  doc.json["polytope"] = polytope_to_json(p);
  doc.json["hstar"] = hstar_to_json(hs);
  doc.json["verified"] = true;

  std::ostringstream csv;
  csv << "a1,a2,dim,hstar\n" << o.a1 << ',' << o.a2 << ',' << p.dim << ",\"";
  for (std::size_t i = 0; i < hs.coeffs.size(); ++i)
    csv << (i ? " " : "") << hs.coeffs[i];
  csv << "\"\n";
  doc.csv = csv.str();
  return doc;
}

// ---- verify suites ----

struct SuiteItem {
  Json json;
  int violations = 0;
  bool counterexample = false;
};

SuiteItem verify_polytope_suite(const std::string& suite, const Source& src) {
  SuiteItem item;
  const VPolytope& p = src.poly;
  auto add_report = [&](const BoundReport& r) {
    item.json.push_back(bound_report_to_json(r));
    if (r.bound_id == "hibi" && !r.hypothesis_met) {
      if (r.any_violation()) item.counterexample = true;
      return;  // violations without the interior-point hypothesis are expected
    }
    if (r.any_violation()) ++item.violations;
  };

  item.json = Json::array();
  if (suite == "thm11") {
    HRep h = facets(p);
    std::vector<Int> counts = dilate_counts(p, h, p.dim);
    EhrhartPoly g = ehrhart_poly_from_counts(counts);
    BoundReport r = thm11_report(src.label, g);
    add_report(r);
    add_report(thm11_improved_report(src.label, g, counts[1]));
  } else if (suite == "corollary12") {
    add_report(corollary12_report(src.label, ehrhart_poly(p)));
  } else if (suite == "bm-upper") {
    add_report(bm_upper_report(src.label, ehrhart_poly(p)));
  } else if (suite == "eq15") {
    add_report(eq15_report(src.label, p.dim, lattice_surface(p)));
  } else if (suite == "hibi") {
    BoundReport r = hibi_check(hstar_from_counts(p));
    r.polytope = src.label;
    add_report(r);
    Json violated_at = Json::array();
    for (const BoundEntry& e : r.entries)
      if (e.verdict == Verdict::Violated) violated_at.push_back(e.index);
    item.json.back()["violated-at"] = std::move(violated_at);
  } else if (suite == "stanley-sym") {
    BoundReport r = stanley_symmetric_check(p);
    r.polytope = src.label;
    add_report(r);
    add_report(conjecture_probe_bhw(hstar_from_counts(p)));
  } else if (suite == "treutlein") {
    HStar hs = hstar_from_counts(p);
    Json j;
    j["bound"] = "treutlein";
    j["polytope"] = src.label;
    j["dim"] = p.dim;
    const int deg = hs.degree();
    j["degree"] = deg;
    if (deg == 2) {
      Int a1 = hs.coeffs[1], a2 = hs.coeffs[2];
      bool ok = treutlein_check(a1, a2);
      j["a1"] = int_to_json(a1);
      j["a2"] = int_to_json(a2);
      j["verdict"] = ok ? "holds" : "violated";
      if (!ok) ++item.violations;
    } else {
      j["verdict"] = "vacuous";
      j["note"] = "degree != 2";
    }
    item.json.push_back(std::move(j));
  } else if (suite == "prop110") {
    SurfaceMinReport r = prop110_check(p);
    Json j;
    j["bound"] = "prop110";
    j["polytope"] = src.label;
    j["dim"] = p.dim;
    j["symmetric"] = r.symmetric;
    j["surface"] = sqrtsum_with_decimal(r.area);
    j["lower_bound"] = sqrtsum_with_decimal(r.bound);
    j["verdict"] = r.equality ? "equality" : (r.holds ? "holds" : "violated");
    j["near_equality"] = r.near_equality;
    if (!r.holds) ++item.violations;
    item.json.push_back(std::move(j));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return item;
}

Document cmd_verify(const Options& o) {
  static const char* kSuites[] = {"thm11",       "corollary12", "bm-upper",
                                  "hibi",        "stanley-sym", "treutlein",
                                  "prop110",     "iso-cross",   "eq15"};
  bool known = false;
  for (const char* s : kSuites) known |= o.suite == s;
  if (!known) throw std::invalid_argument("unknown suite '" + o.suite + "'");

  Document doc;
  doc.json["command"] = "verify";
  doc.json["suite"] = o.suite;
  Json params;
  if (!o.expr.empty()) params["expr"] = o.expr;
  if (!o.file.empty()) params["file"] = o.file;
  if (o.random_n > 0) {
    params["random"] = o.random_n;
    params["dim"] = o.dim;
    params["box"] = o.box;
    params["seed"] = o.seed;
  }
  doc.json["params"] = std::move(params);

  std::ostringstream csv;
  csv << "suite,polytope,index,bound,bound_decimal,actual,actual_decimal,"
         "slack,verdict\n";

  int violations = 0;
  bool counterexample = false;
  Json reports = Json::array();

  if (o.suite == "iso-cross") {
    if (o.random_n <= 0)
      throw std::invalid_argument("iso-cross requires --random");
    if (!o.has_seed)
      throw std::invalid_argument("--seed is mandatory with --random");
    if (o.dim < 2) throw std::invalid_argument("--dim (>= 2) is mandatory");
    std::vector<Json> items(o.random_n);
    std::vector<int> viols(o.random_n, 0);
    parallel_for(o.random_n, [&](std::size_t i) {
      auto gens = random_cross_generators(o.dim, o.box, mix_seed(o.seed, i));
      IsoCrossReport r = iso_ratio_check(gens);
      Json j;
      j["bound"] = "iso-cross";
      j["polytope"] = "random[" + std::to_string(i) + "]";
      j["dim"] = o.dim;
      Json g = Json::array();
      for (const IntVec& v : gens) g.push_back(intvec_to_json(v));
      j["generators"] = std::move(g);
      j["ratio"] = r.ratio;
      j["lower_bound"] = r.bound;
      j["verdict"] = r.holds ? (r.near_equality ? "equality" : "holds")
                             : "violated";
      if (!r.holds) viols[i] = 1;
      items[i] = std::move(j);
    });
    for (long i = 0; i < o.random_n; ++i) {
      violations += viols[i];
      csv << "iso-cross,random[" << i << "],,," << items[i]["lower_bound"]
          << ",," << items[i]["ratio"] << ",," << items[i]["verdict"].get<std::string>()
          << '\n';
      reports.push_back(std::move(items[i]));
    }
  } else {
    SymmetricMode sym = SymmetricMode::Never;
    if (o.suite == "stanley-sym") sym = SymmetricMode::Always;
    if (o.suite == "prop110") sym = SymmetricMode::Alternate;
    std::vector<Source> sources = make_sources(o, sym);
    std::vector<SuiteItem> items(sources.size());
    parallel_for(sources.size(), [&](std::size_t i) {
      items[i] = verify_polytope_suite(o.suite, sources[i]);
    });
    for (SuiteItem& item : items) {
      violations += item.violations;
      counterexample |= item.counterexample;
      for (Json& j : item.json) reports.push_back(std::move(j));
    }
    // rebuild rows for csv from the emitted json
    for (const Json& j : reports) {
      if (j.contains("entries")) {
        for (const Json& e : j["entries"]) {
          Rat bound = rat_from_string(e["bound"].get<std::string>());
          Rat actual = rat_from_string(e["actual"].get<std::string>());
          csv << j["bound"].get<std::string>() << ','
              << csv_escape(j["polytope"].get<std::string>()) << ','
              << e["index"] << ',' << rat_to_string(bound) << ','
              << rat_to_decimal(bound) << ',' << rat_to_string(actual) << ','
              << rat_to_decimal(actual) << ',' << e["slack"].get<std::string>()
              << ',' << e["verdict"].get<std::string>() << '\n';
        }
        continue;
      }
      if (!j.contains("verdict")) continue;
      std::string bound_dec, actual_dec;
      if (j.contains("lower_bound") && j["lower_bound"].is_object())
        bound_dec = j["lower_bound"]["decimal"].get<std::string>();
      if (j.contains("surface"))
        actual_dec = j["surface"]["decimal"].get<std::string>();
      csv << j["bound"].get<std::string>() << ','
          << csv_escape(j["polytope"].get<std::string>()) << ",,,"
          << bound_dec << ",," << actual_dec << ",,"
          << j["verdict"].get<std::string>() << '\n';
    }
  }

  doc.json["reports"] = std::move(reports);
  Json summary;
  summary["reports"] = doc.json["reports"].size();
  summary["violations"] = violations;
  if (o.suite == "hibi") {
    summary["verdict"] = counterexample ? "counterexample-confirmed"
                         : (violations ? "violated" : "holds");
  }
  doc.json["summary"] = std::move(summary);
  doc.csv = csv.str();
  doc.exit_code = violations > 0 ? kExitViolation : kExitOk;
  return doc;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  CLI::App app{"Exact Ehrhart polynomial, h*-vector and surface-area toolkit"};
  app.name("ehrtool");
  app.require_subcommand(1);

  Options o;
  auto add_source = [&](CLI::App* cmd, bool with_random) {
    cmd->add_option("--expr", o.expr, "construction expression");
    cmd->add_option("--file", o.file, "polytope JSON file");
    if (with_random) {
      cmd->add_option("--random", o.random_n, "number of random polytopes");
      cmd->add_option("--dim", o.dim, "dimension for random polytopes");
      cmd->add_option("--box", o.box, "coordinate box for random polytopes");
      cmd->add_option("--seed", o.seed, "RNG seed")
          ->each([&](const std::string&) { o.has_seed = true; });
    }
    cmd->add_option("--out", o.out, "write the document to a file");
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* construct = app.add_subcommand("construct", "emit a polytope");
  add_source(construct, false);
  CLI::App* countc = app.add_subcommand("count", "lattice points of a dilate");
  add_source(countc, false);
  countc->add_option("--k", o.k, "dilation factor");
  countc->add_flag("--strict", o.strict, "count interior points");
  CLI::App* hstarc = app.add_subcommand("hstar", "Ehrhart data of a polytope");
  add_source(hstarc, false);
  CLI::App* surfacec = app.add_subcommand("surface", "exact surface areas");
  add_source(surfacec, false);
  CLI::App* witnessc =
      app.add_subcommand("witness", "degree-2 h* witness polytope");
  witnessc->add_option("--a1", o.a1, "linear coefficient")->required();
  witnessc->add_option("--a2", o.a2, "quadratic coefficient")->required();
  witnessc->add_option("--out", o.out, "write the document to a file");
  witnessc->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  CLI::App* verifyc = app.add_subcommand("verify", "run a verification suite");
  add_source(verifyc, true);
  verifyc->add_option("--suite", o.suite, "suite name")->required();

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("ehrtool"));
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  Document doc;
  try {
    if (app.got_subcommand(construct)) doc = cmd_construct(o);
    else if (app.got_subcommand(countc)) doc = cmd_count(o);
    else if (app.got_subcommand(hstarc)) doc = cmd_hstar(o);
    else if (app.got_subcommand(surfacec)) doc = cmd_surface(o);
    else if (app.got_subcommand(verifyc)) doc = cmd_verify(o);
    else if (app.got_subcommand(witnessc)) {
      try {
        doc = cmd_witness(o);
      } catch (const std::invalid_argument& e) {
        result.err = std::string("inadmissible: ") + e.what() + "\n";
        result.exit_code = kExitInadmissible;
        return result;
      }
    }
  } catch (const std::invalid_argument& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
    return result;
  } catch (const std::logic_error& e) {
    result.err = std::string("invariant failure: ") + e.what() + "\n";
    result.exit_code = kExitViolation;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string("error: ") + e.what() + "\n";
    result.exit_code = kExitUsage;
    return result;
  }

  result.out = o.format == "csv" ? doc.csv : doc.json.dump(2) + "\n";
  result.exit_code = doc.exit_code;
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      result.err = "error: cannot write '" + o.out + "'\n";
      result.exit_code = kExitUsage;
      return result;
    }
    f << result.out;
  }
  return result;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunResult r = run(args);
  if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
  if (!r.err.empty()) std::fputs(r.err.c_str(), stderr);
  return r.exit_code;
}

}  // namespace ehrhart::cli
