#pragma once

#include <json.hpp>

#include <string>

#include "hofer/geodesy.hpp"
#include "hofer/kirwan.hpp"
#include "hofer/norms.hpp"

namespace hofer::io {

using json = nlohmann::json;

// Rationals serialize as "p/q" strings; numeric JSON values are snapped to
// rationals with bounded denominator on ingestion.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, unsigned long snap_den = 1000000000UL);

json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j, unsigned long snap_den = 1000000000UL);

// Complex matrices are row-major arrays of [re, im] pairs.
json cmat_to_json(const CMat& m);
CMat cmat_from_json(const json& j);

json family_to_json(const OrbitFamily& E);
OrbitFamily family_from_json(const json& j, unsigned long snap_den = 1000000000UL);

json polytope_to_json(const Polytope& P);
json facet_to_json(const Facet& f);

json skew_to_json(const SkewHermitian& x);
SkewHermitian skew_from_json(const json& j, double eps_mat = 1e-9);

json path_to_json(const GroupPath& p);
GroupPath path_from_json(const json& j, double eps_mat = 1e-9);

json derivs_to_json(const DerivativePath& d);
DerivativePath derivs_from_json(const json& j, double eps_mat = 1e-9);

json certificate_to_json(const GeodesicCertificate& c);
json norming_certificate_to_json(const NormingCertificate& c);
json dichotomy_to_json(const DichotomyReport& r);
json quasi_autonomy_to_json(const QuasiAutonomyReport& r);

// CSV slice of a polytope onto two coordinates, one vertex per line.
std::string polytope_slice_csv(const Polytope& P, int ci, int cj);

// (t, eigenvalue_1(x_t), ..., eigenvalue_n(x_t)) per sampled derivative, for
// non-crossing plots.
std::string eigenvalue_csv(const DerivativePath& d);

json load_json_file(const std::string& path);

}  // namespace hofer::io
