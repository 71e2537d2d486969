#include "hofer/io.hpp"

#include <fstream>
#include <sstream>

namespace hofer::io {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j, unsigned long snap_den) {
  try {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_number_float()) return snap_to_rational(j.get<double>(), snap_den);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad rational: ") + e.what());
  }
  throw SchemaError("bad rational: expected string or number");
}

json ratvec_to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatVec ratvec_from_json(const json& j, unsigned long snap_den) {
  if (!j.is_array()) throw SchemaError("bad vector: expected array");
  RatVec v;
  for (const json& e : j) v.push_back(rat_from_json(e, snap_den));
  return v;
}

json cmat_to_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMat cmat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("bad matrix: expected non-empty array");
  const int n = static_cast<int>(j.size());
  CMat m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError("bad matrix: not square");
    for (int k = 0; k < n; ++k) {
      const json& e = row.at(k);
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
        throw SchemaError("bad matrix entry: expected [re, im]");
      m(i, k) = Cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

json family_to_json(const OrbitFamily& E) {
  json j;
  j["n"] = E.n;
  j["mode"] = E.mode == FamilyMode::KirwanHull ? "kirwan_hull" : "discrete_union";
  json vs = json::array();
  for (const RatVec& v : E.vertices) vs.push_back(ratvec_to_json(v));
  j["vertices"] = std::move(vs);
  return j;
}

OrbitFamily family_from_json(const json& j, unsigned long snap_den) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vertices"))
    throw SchemaError("bad family: need {n, vertices}");
  if (!j.at("n").is_number_integer()) throw SchemaError("bad family: n must be an integer");
  const int n = j.at("n").get<int>();
  FamilyMode mode = FamilyMode::KirwanHull;
  if (j.contains("mode")) {
    const std::string m = j.at("mode").get<std::string>();
    if (m == "kirwan_hull") mode = FamilyMode::KirwanHull;
    else if (m == "discrete_union") mode = FamilyMode::DiscreteUnion;
    else throw SchemaError("bad family mode: " + m);
  }
  std::vector<RatVec> verts;
  for (const json& v : j.at("vertices")) verts.push_back(ratvec_from_json(v, snap_den));
  try {
    return make_family(n, mode, std::move(verts));
  } catch (const NotDominant& e) {
    throw SchemaError(std::string("bad family: ") + e.what());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const NotFull*>(&e)) throw;  // NotFull keeps its own exit code
    throw SchemaError(std::string("bad family: ") + e.what());
  }
}

json facet_to_json(const Facet& f) {
  json j;
  j["normal"] = ratvec_to_json(f.normal);
  j["offset"] = rat_to_json(f.offset);
  return j;
}

json polytope_to_json(const Polytope& P) {
  json j;
  j["n"] = P.n;
  json vs = json::array();
  for (const RatVec& v : P.vertices) vs.push_back(ratvec_to_json(v));
  j["vertices"] = std::move(vs);
  if (P.hrep) {
    json fs = json::array();
    for (const Facet& f : P.hrep->facets) fs.push_back(facet_to_json(f));
    j["facets"] = std::move(fs);
    if (!P.hrep->equalities.empty()) {
      json es = json::array();
      for (const Facet& e : P.hrep->equalities) es.push_back(facet_to_json(e));
      j["equalities"] = std::move(es);
    }
    j["lower_dimensional"] = P.hrep->lower_dimensional;
  }
  return j;
}

json skew_to_json(const SkewHermitian& x) { return cmat_to_json(x.mat()); }

SkewHermitian skew_from_json(const json& j, double eps_mat) {
  try {
    return SkewHermitian(cmat_from_json(j), eps_mat);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad su(n) element: ") + e.what());
  }
}

json path_to_json(const GroupPath& p) {
  json j;
  j["times"] = p.times;
  json pts = json::array();
  for (const UnitaryElement& u : p.points) pts.push_back(cmat_to_json(u.mat()));
  j["points"] = std::move(pts);
  return j;
}

GroupPath path_from_json(const json& j, double eps_mat) {
  if (!j.is_object() || !j.contains("times") || !j.contains("points"))
    throw SchemaError("bad path: need {times, points}");
  GroupPath p;
  for (const json& t : j.at("times")) {
    if (!t.is_number()) throw SchemaError("bad path: times must be numbers");
    p.times.push_back(t.get<double>());
  }
  for (const json& m : j.at("points")) {
    try {
      p.points.emplace_back(cmat_from_json(m), eps_mat);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("bad path point: ") + e.what());
    }
  }
  if (p.times.size() != p.points.size())
    throw SchemaError("bad path: times and points differ in length");
  return p;
}

json derivs_to_json(const DerivativePath& d) {
  json j;
  j["times"] = d.times;
  json xs = json::array();
  for (const SkewHermitian& x : d.derivatives) xs.push_back(skew_to_json(x));
  j["derivatives"] = std::move(xs);
  return j;
}

DerivativePath derivs_from_json(const json& j, double eps_mat) {
  if (!j.is_object() || !j.contains("times") || !j.contains("derivatives"))
    throw SchemaError("bad derivatives: need {times, derivatives}");
  DerivativePath d;
  for (const json& t : j.at("times")) {
    if (!t.is_number()) throw SchemaError("bad derivatives: times must be numbers");
    d.times.push_back(t.get<double>());
  }
  for (const json& m : j.at("derivatives")) d.derivatives.push_back(skew_from_json(m, eps_mat));
  if (d.times.size() != d.derivatives.size() + 1)
    throw SchemaError("bad derivatives: need one more time than derivative");
  for (std::size_t k = 0; k + 1 < d.times.size(); ++k)
    if (!(d.times[k] < d.times[k + 1]))
      throw SchemaError("bad derivatives: times must be strictly increasing");
  return d;
}

json certificate_to_json(const GeodesicCertificate& c) {
  json j;
  j["verdict"] = verdict_name(c.verdict);
  j["method"] = cert_method_name(c.method);
  if (c.functional) j["functional"] = ratvec_to_json(*c.functional);
  json dirs = json::array();
  for (const RatVec& v : c.directions) dirs.push_back(ratvec_to_json(v));
  j["directions"] = std::move(dirs);
  json pw = json::array(), mw = json::array();
  for (const RatVec& v : c.plus_witnesses) pw.push_back(ratvec_to_json(v));
  for (const RatVec& v : c.minus_witnesses) mw.push_back(ratvec_to_json(v));
  j["plus_witnesses"] = std::move(pw);
  j["minus_witnesses"] = std::move(mw);
  if (c.plus_point) j["plus_point"] = cmat_to_json(*c.plus_point);
  if (c.minus_point) j["minus_point"] = cmat_to_json(*c.minus_point);
  j["snap_error"] = c.snap_error;
  j["residual"] = c.residual;
  return j;
}

json norming_certificate_to_json(const NormingCertificate& c) {
  json j;
  j["plus_face"] = polytope_to_json(c.plus_face);
  j["minus_face"] = polytope_to_json(c.minus_face);
  j["functional"] = ratvec_to_json(c.functional);
  return j;
}

json dichotomy_to_json(const DichotomyReport& r) {
  auto kind_json = [](const KindVerdict& v) {
    json j;
    j["commuting"] = v.commuting;
    j["polytope_vertices"] = v.polytope_vertices;
    if (v.witness) j["witness"] = ratvec_to_json(*v.witness);
    return j;
  };
  json j;
  j["hofer"] = kind_json(r.hofer);
  j["second"] = kind_json(r.second);
  j["one_sided_plus"] = kind_json(r.one_sided_plus);
  if (r.regular_orbit_equivalent) {
    j["regular_orbit_equivalent"] = ratvec_to_json(*r.regular_orbit_equivalent);
    j["equivalence_route"] = r.equivalence_route;
  }
  j["provenance"] = r.provenance;
  return j;
}

json quasi_autonomy_to_json(const QuasiAutonomyReport& r) {
  json j;
  j["certified"] = r.certified;
  j["plus_face"] = polytope_to_json(r.plus_face);
  j["minus_face"] = polytope_to_json(r.minus_face);
  j["certificate"] = certificate_to_json(r.certificate);
  return j;
}

std::string polytope_slice_csv(const Polytope& P, int ci, int cj) {
  if (ci < 0 || cj < 0 || ci >= P.n || cj >= P.n)
    throw std::invalid_argument("polytope_slice_csv: coordinate out of range");
  std::ostringstream os;
  os << "x" << ci << ",x" << cj << "\n";
  for (const RatVec& v : P.vertices)
    os << to_double(v[ci]) << "," << to_double(v[cj]) << "\n";
  return os.str();
}

std::string eigenvalue_csv(const DerivativePath& d) {
  std::ostringstream os;
  const int n = d.derivatives.empty() ? 0 : d.derivatives[0].n();
  os << "t";
  for (int j = 1; j <= n; ++j) os << ",lambda" << j;
  os << "\n";
  // Tracked coordinates in the joint eigenbasis make crossings visible; for
  // non-commuting families fall back to the sorted spectra.
  std::vector<std::vector<double>> rows;
  try {
    rows = joint_eigenbasis(d.derivatives, 1e-7).coords;
  } catch (const NotCommuting&) {
    for (const SkewHermitian& x : d.derivatives) rows.push_back(spectrum(x).values);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    os << d.times[k];
    for (double v : rows[k]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SchemaError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace hofer::io
