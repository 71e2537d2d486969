#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hofer/io.hpp"
#include "hofer/sampling.hpp"

using namespace hofer;
using io::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Exit-code contract: 0 ok/certified, 1 refuted or battery failure, 2 schema,
// 3 NotFull, 4 DimensionTooLarge, 5 inconclusive, 6 not-commuting.
enum ExitCode {
  kOk = 0,
  kFail = 1,
  kSchema = 2,
  kNotFull = 3,
  kTooLarge = 4,
  kInconclusive = 5,
  kNotCommuting = 6,
};

struct RunConfig {
  std::uint64_t seed = 1;
  double scale = 1.0;
  double tol_mat = 1e-9;
  double tol_branch = 1e-6;
  double tol_cluster = 1e-7;
  unsigned long snap_den = 1000000000UL;
  std::string out;

  Tolerances tolerances() const {
    Tolerances t;
    t.mat = tol_mat;
    t.branch = tol_branch;
    t.cluster = tol_cluster;
    t.snap_den = snap_den;
    return t;
  }
};

void emit(const RunConfig& cfg, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write to " + cfg.out);
    f << text;
  }
}

void emit_text(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write to " + cfg.out);
    f << text;
  }
}

RatVec parse_inline_spectrum(const std::string& s, unsigned long snap_den) {
  RatVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.find('/') != std::string::npos || tok.find('.') == std::string::npos) {
      v.push_back(rat_from_string(tok));
    } else {
      v.push_back(snap_to_rational(std::stod(tok), snap_den));
    }
  }
  if (v.size() < 2) throw SchemaError("spectrum needs at least two entries");
  if (vec_sum(v) != 0) throw SchemaError("spectrum must sum to zero");
  return v;
}

NormKind parse_kind(const std::string& s) {
  auto k = norm_kind_from_name(s);
  if (!k) throw SchemaError("unknown norm kind: " + s);
  return *k;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_norm(const RunConfig& cfg, const std::string& family_file, const std::string& x_file,
             const std::string& spectrum_arg, const std::string& kind_name) {
  OrbitFamily E = io::family_from_json(io::load_json_file(family_file), cfg.snap_den);
  NormKind kind = parse_kind(kind_name);

  RatVec xi;
  double snap_err = 0.0;
  if (!spectrum_arg.empty()) {
    xi = parse_inline_spectrum(spectrum_arg, cfg.snap_den);
  } else if (!x_file.empty()) {
    SkewHermitian x = io::skew_from_json(io::load_json_file(x_file), cfg.tol_mat);
    if (x.n() != E.n) throw SchemaError("element dimension does not match the family");
    xi = snap_sum_zero(hofer::spectrum(x).values, cfg.snap_den, &snap_err);
  } else {
    throw SchemaError("need --spectrum or --x");
  }
  if (static_cast<int>(xi.size()) != E.n) throw SchemaError("spectrum dimension mismatch");

  Rat scale = snap_to_rational(cfg.scale, cfg.snap_den);
  Rat value = norm_exact(E, xi, kind, scale);

  json rep;
  rep["kind"] = norm_kind_name(kind);
  rep["value"] = to_double(value);
  rep["value_exact"] = rat_to_string(value);
  rep["spectrum"] = io::ratvec_to_json(xi);
  rep["scale"] = cfg.scale;
  rep["snap_error"] = snap_err;
  RatVec dom = weyl::dominant(xi);
  if (!is_zero_vec(dom))
    rep["certificate"] = io::norming_certificate_to_json(norming_certificate(E, dom, kind));

  std::cerr << "norm[" << norm_kind_name(kind) << "] = " << format_value(to_double(value)) << "\n";
  emit(cfg, rep);
  return kOk;
}

int cmd_polytope(const RunConfig& cfg, const std::string& family_file,
                 const std::string& kind_name, const std::string& export_fmt,
                 const std::string& coords) {
  OrbitFamily E = io::family_from_json(io::load_json_file(family_file), cfg.snap_den);
  NormKind kind = parse_kind(kind_name);
  Polytope P = hofer_polytope(E, kind);
  ensure_hrep(P);

  if (export_fmt == "csv") {
    int ci = 0, cj = 1;
    if (!coords.empty()) {
      if (std::sscanf(coords.c_str(), "%d,%d", &ci, &cj) != 2)
        throw SchemaError("--coords expects j,k");
    }
    emit_text(cfg, io::polytope_slice_csv(P, ci, cj));
  } else {
    json rep = io::polytope_to_json(P);
    rep["kind"] = norm_kind_name(kind);
    emit(cfg, rep);
  }
  std::cerr << P.vertices.size() << " vertices, " << P.hrep->facets.size() << " facets written\n";
  return kOk;
}

int cmd_certify(const RunConfig& cfg, const std::string& path_file,
                const std::string& derivs_file, const std::string& family_file,
                const std::string& kind_name, const std::string& method, int restarts,
                const std::string& eig_csv) {
  OrbitFamily E = io::family_from_json(io::load_json_file(family_file), cfg.snap_den);
  NormKind kind = parse_kind(kind_name);

  DerivativePath derivs;
  if (!path_file.empty()) {
    GroupPath p = io::path_from_json(io::load_json_file(path_file), cfg.tol_mat);
    derivs = log_derivatives(p, cfg.tol_branch);
  } else if (!derivs_file.empty()) {
    derivs = io::derivs_from_json(io::load_json_file(derivs_file), cfg.tol_mat);
  } else {
    throw SchemaError("need --path or --derivs");
  }
  for (const SkewHermitian& x : derivs.derivatives)
    if (x.n() != E.n) throw SchemaError("derivative dimension does not match the family");
  if (!eig_csv.empty()) {
    std::ofstream f(eig_csv);
    if (!f) throw std::runtime_error("cannot write to " + eig_csv);
    f << io::eigenvalue_csv(derivs);
  }

  GeodesicCertificate cert;
  if (method == "commuting-lp") {
    try {
      cert = certify_commuting(derivs, E, kind, cfg.tolerances());
    } catch (const NotCommuting& e) {
      json rep;
      rep["verdict"] = "not-commuting";
      rep["worst_pair"] = {e.first, e.second};
      rep["bracket_norm"] = e.bracket_norm;
      std::cerr << "not-commuting: derivatives " << e.first << " and " << e.second
                << " have bracket norm " << e.bracket_norm << "\n";
      emit(cfg, rep);
      return kNotCommuting;
    }
  } else if (method == "regular-orbit") {
    cert = certify_regular_orbit(derivs, E, cfg.tolerances());
  } else {
    cert = certify(derivs, E, kind, cfg.tolerances(), restarts, cfg.seed);
  }

  json rep = io::certificate_to_json(cert);
  rep["kind"] = norm_kind_name(kind);
  std::cerr << "verdict: " << verdict_name(cert.verdict) << " (" << cert_method_name(cert.method)
            << ")\n";
  emit(cfg, rep);
  switch (cert.verdict) {
    case Verdict::Certified: return kOk;
    case Verdict::Refuted: return kFail;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

int cmd_kirwan(const RunConfig& cfg, const std::string& family_file,
               const std::vector<std::string>& product_files, const std::string& slice_csv,
               const std::string& coords) {
  auto load = [&](const std::string& f, int idx) {
    OrbitFamily E = io::family_from_json(io::load_json_file(f), cfg.snap_den);
    return KirwanInput{std::move(E), f.empty() ? "input" + std::to_string(idx) : f};
  };
  KirwanInput K = load(family_file, 0);
  DichotomyReport rep;
  OrbitFamily analyzed = K.family;
  if (product_files.empty()) {
    rep = commuting_hamiltonians(K);
  } else {
    std::vector<KirwanInput> inputs{K};
    int idx = 1;
    for (const std::string& f : product_files) inputs.push_back(load(f, idx++));
    auto [comp, r] = product_compose(inputs);
    rep = std::move(r);
    analyzed = comp.family;
  }
  if (!slice_csv.empty()) {
    int ci = 0, cj = 1;
    if (!coords.empty() && std::sscanf(coords.c_str(), "%d,%d", &ci, &cj) != 2)
      throw SchemaError("--coords expects j,k");
    std::ofstream f(slice_csv);
    if (!f) throw std::runtime_error("cannot write to " + slice_csv);
    f << io::polytope_slice_csv(hofer_polytope(analyzed, NormKind::Hofer), ci, cj);
  }
  std::cerr << "commuting[hofer]: " << (rep.hofer.commuting ? "true" : "false") << "\n";
  if (rep.regular_orbit_equivalent)
    std::cerr << "regular orbit equivalent found (route: " << rep.equivalence_route << ")\n";
  emit(cfg, io::dichotomy_to_json(rep));
  return kOk;
}

// --- batteries ---------------------------------------------------------------

int battery_expono(const RunConfig& cfg, int samples, json& rep) {
  sampling::Rng rng(cfg.seed);
  int done = 0;
  while (done < samples) {
    const int n = 2 + done % 3;
    NormBattery battery = sampling::default_battery(rng, n, 10);
    const bool small_case = done % 10 == 9;
    SkewHermitian w = small_case
                          ? sampling::random_skew_with_inf_norm(rng, n, 0.2, kPi - 0.1)
                          : sampling::random_skew_with_inf_norm(rng, n, kPi + 0.02, 2 * kPi - 0.02);
    ExpTheoremReport r = check_exponential_theorem(w, battery, 1e-9, cfg.tol_branch);
    if (!r.pass) {
      rep["counterexample"] = io::skew_to_json(w);
      rep["failed_at"] = done;
      std::cerr << "FAIL expono sample " << done << "\n"
                << io::skew_to_json(w).dump(2) << "\n";
      return kFail;
    }
    ++done;
  }
  rep["samples"] = done;
  return kOk;
}

int battery_product_exp(const RunConfig& cfg, int samples, json& rep) {
  sampling::Rng rng(cfg.seed);
  for (int t = 0; t < samples; ++t) {
    const int n = 2 + t % 3;
    NormBattery battery = sampling::default_battery(rng, n, 10);
    SkewHermitian x = sampling::random_skew(rng, n, 0.8);
    SkewHermitian y = sampling::random_skew(rng, n, 0.7);
    if (t % 5 == 4) y = scale_by(x, 0.5);  // constructed commuting case
    ProductExpReport r = check_product_exponentials(x, y, battery, 1e-9, cfg.tol_branch);
    if (!r.pass || (t % 5 == 4 && !r.commuting_case)) {
      rep["counterexample_x"] = io::skew_to_json(x);
      rep["counterexample_y"] = io::skew_to_json(y);
      rep["failed_at"] = t;
      std::cerr << "FAIL product-exp sample " << t << "\n"
                << io::skew_to_json(x).dump(2) << "\n"
                << io::skew_to_json(y).dump(2) << "\n";
      return kFail;
    }
  }
  rep["samples"] = samples;
  return kOk;
}

int battery_metric_decreasing(const RunConfig& cfg, int samples, json& rep) {
  sampling::Rng rng(cfg.seed);
  for (int t = 0; t < samples; ++t) {
    const int n = 2 + t % 3;
    OrbitFamily E = sampling::random_family(rng, n, 2);
    const NormKind kinds[] = {NormKind::Hofer, NormKind::Second, NormKind::OneSidedPlus,
                              NormKind::OneSidedMinus};
    NormKind kind = kinds[t % 4];
    SkewHermitian v = sampling::random_skew(rng, n, 0.7);
    SkewHermitian w = sampling::random_skew(rng, n, 0.7);
    if (t % 4 == 2) w = add(v, scale_by(v, 0.1));  // commuting equality case
    MetricDecreasingReport r = check_exp_metric_decreasing(v, w, E, kind, 1e-9, cfg.tol_branch);
    if (!r.pass) {
      rep["counterexample_v"] = io::skew_to_json(v);
      rep["counterexample_w"] = io::skew_to_json(w);
      rep["failed_at"] = t;
      std::cerr << "FAIL metric-decreasing sample " << t << "\n";
      return kFail;
    }
  }
  rep["samples"] = samples;
  return kOk;
}

int battery_majorization(const RunConfig& cfg, int samples, json& rep) {
  sampling::Rng rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, 99);
  int positives = 0;
  for (int t = 0; t < samples; ++t) {
    const int n = 3 + t % 3;
    RatVec w = sampling::random_sum_zero_ratvec(rng, n);
    RatVec z;
    if (t % 2 == 0) {
      // constructed positive case: a rational convex combination of orbit points
      std::vector<RatVec> orbit = weyl::orbit(w);
      RatVec acc(n, Rat(0));
      Rat total = 0;
      for (int j = 0; j < 3; ++j) {
        Rat lam = make_rat(1 + pick(rng) % 7, 8);
        acc = vec_add(acc, vec_scale(orbit[pick(rng) % orbit.size()], lam));
        total += lam;
      }
      z = vec_scale(acc, 1 / total);
    } else {
      z = sampling::random_sum_zero_ratvec(rng, n);
    }
    // majorizes_exact runs both routes and throws logic_error on disagreement
    bool m = majorizes_exact(w, z);
    if (t % 2 == 0 && !m) {
      rep["counterexample_w"] = io::ratvec_to_json(w);
      rep["counterexample_z"] = io::ratvec_to_json(z);
      std::cerr << "FAIL majorization: convex combination not majorized, sample " << t << "\n";
      return kFail;
    }
    positives += m;
  }
  rep["samples"] = samples;
  rep["positive_verdicts"] = positives;
  return kOk;
}

int cmd_battery(const RunConfig& cfg, const std::string& theorem, int samples) {
  json rep;
  rep["theorem"] = theorem;
  rep["seed"] = cfg.seed;
  int rc;
  if (theorem == "expono") rc = battery_expono(cfg, samples, rep);
  else if (theorem == "product-exp") rc = battery_product_exp(cfg, samples, rep);
  else if (theorem == "metric-decreasing") rc = battery_metric_decreasing(cfg, samples, rep);
  else if (theorem == "majorization") rc = battery_majorization(cfg, samples, rep);
  else throw SchemaError("unknown theorem battery: " + theorem);
  rep["pass"] = rc == kOk;
  std::cerr << "battery " << theorem << ": " << (rc == kOk ? "PASS" : "FAIL") << "\n";
  emit(cfg, rep);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hofer norms on su(n): polytopes, norms, geodesic certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed for batteries and heuristics");
  app.add_option("--scale", cfg.scale, "inner-product scale (2n gives the Killing normalization)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-mat", cfg.tol_mat, "matrix invariant tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-branch", cfg.tol_branch, "log branch tolerance (radians)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-cluster", cfg.tol_cluster, "eigenvalue clustering tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--snap-denom", cfg.snap_den, "denominator bound for rationalization")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write the JSON/CSV report to this file");

  std::string family_file, x_file, spectrum, kind_name = "hofer";
  std::string path_file, derivs_file, export_fmt = "json", coords, method = "auto";
  std::string eig_csv, slice_csv;
  std::vector<std::string> product_files;
  std::string theorem;
  int samples = 100, restarts = 100;

  CLI::App* norm = app.add_subcommand("norm", "evaluate a generalized Hofer norm");
  norm->add_option("--family", family_file, "orbit family JSON")->required();
  norm->add_option("--x", x_file, "su(n) element JSON");
  norm->add_option("--spectrum", spectrum, "inline spectrum, e.g. 2,1,-3");
  norm->add_option("--kind", kind_name, "hofer|second|one-sided-plus|one-sided-minus");

  CLI::App* poly = app.add_subcommand("polytope", "build and export the norm polytope");
  poly->add_option("--family", family_file)->required();
  poly->add_option("--kind", kind_name);
  poly->add_option("--export", export_fmt, "json|csv");
  poly->add_option("--coords", coords, "CSV slice coordinates j,k");

  CLI::App* cert = app.add_subcommand("certify", "certify a discretized path as a geodesic");
  cert->add_option("--path", path_file, "group path JSON");
  cert->add_option("--derivs", derivs_file, "derivative path JSON");
  cert->add_option("--family", family_file)->required();
  cert->add_option("--kind", kind_name);
  cert->add_option("--method", method, "auto|commuting-lp|regular-orbit");
  cert->add_option("--restarts", restarts, "heuristic restarts");
  cert->add_option("--eigenvalue-csv", eig_csv, "write (t, eigenvalues) rows for crossing plots");

  CLI::App* kirwan = app.add_subcommand("kirwan", "Kirwan-polytope dichotomy analysis");
  kirwan->add_option("--family", family_file)->required();
  kirwan->add_option("--product", product_files, "compose with further factors");
  kirwan->add_option("--slice-csv", slice_csv, "write a 2-D slice of the Hofer polytope");
  kirwan->add_option("--coords", coords, "slice coordinates j,k");

  CLI::App* battery = app.add_subcommand("battery", "sampled theorem property batteries");
  battery->add_option("--theorem", theorem, "expono|product-exp|metric-decreasing|majorization")
      ->required();
  battery->add_option("--samples", samples);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*norm) return cmd_norm(cfg, family_file, x_file, spectrum, kind_name);
    if (*poly) return cmd_polytope(cfg, family_file, kind_name, export_fmt, coords);
    if (*cert)
      return cmd_certify(cfg, path_file, derivs_file, family_file, kind_name, method,
                         restarts, eig_csv);
    if (*kirwan) return cmd_kirwan(cfg, family_file, product_files, slice_csv, coords);
    if (*battery) return cmd_battery(cfg, theorem, samples);
  } catch (const NotFull& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotFull;
  } catch (const DimensionTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const NotCommuting& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotCommuting;
  } catch (const StepTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kSchema;
}
