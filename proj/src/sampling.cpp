#include "hofer/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace hofer::sampling {

RatVec random_dominant_ratvec(Rng& rng, int n, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  for (;;) {
    const int d = den(rng);
    RatVec v(n);
    for (int i = 0; i < n; ++i) v[i] = make_rat(num(rng), d);
    Rat mean = vec_sum(v) / n;
    for (Rat& x : v) x -= mean;
    sort_desc(v);
    if (!is_zero_vec(v)) return v;
  }
}

RatVec random_sum_zero_ratvec(Rng& rng, int n, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = make_rat(num(rng), d);
  Rat mean = vec_sum(v) / n;
  for (Rat& x : v) x -= mean;
  return v;
}

OrbitFamily random_family(Rng& rng, int n, int max_vertices, FamilyMode mode) {
  std::uniform_int_distribution<int> count(1, max_vertices);
  const int k = count(rng);
  std::vector<RatVec> verts;
  for (int i = 0; i < k; ++i) verts.push_back(random_dominant_ratvec(rng, n));
  return make_family(n, mode, std::move(verts));
}

SkewHermitian random_skew(Rng& rng, int n, double frob_scale) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Cplx(g(rng), g(rng));
  SkewHermitian x = SkewHermitian::project(m);
  const double nrm = x.mat().norm();
  if (nrm == 0.0) return random_skew(rng, n, frob_scale);
  return scale_by(x, frob_scale / nrm);
}

SkewHermitian random_skew_with_inf_norm(Rng& rng, int n, double lo, double hi) {
  constexpr double kPi = 3.14159265358979323846;
  std::uniform_real_distribution<double> target(lo, hi);
  for (;;) {
    SkewHermitian x = random_skew(rng, n);
    const double cur = spectral_norm_inf(x);
    SkewHermitian y = scale_by(x, target(rng) / cur);
    // keep the spectrum clear of the branch boundary so logs stay reliable
    bool clear = true;
    for (double v : spectrum(y).values)
      if (std::abs(std::abs(v) - kPi) < 1e-4) clear = false;
    if (clear) return y;
  }
}

UnitaryElement random_unitary(Rng& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Cplx(g(rng), g(rng));
  Eigen::HouseholderQR<CMat> qr(m);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Cplx d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  Cplx det = q.determinant();
  q.col(0) /= det;
  return UnitaryElement(q);
}

NormBattery default_battery(Rng& rng, int n, int count) {
  NormBattery battery;
  std::vector<OrbitFamily> families;

  RatVec root(n, Rat(0));
  root[0] = 1;
  root[n - 1] = -1;
  families.push_back(make_family(n, FamilyMode::KirwanHull, {root}));

  RatVec ladder(n);
  for (int i = 0; i < n; ++i) ladder[i] = Rat(n - 1 - 2 * i);
  families.push_back(make_family(n, FamilyMode::KirwanHull, {ladder}));

  RatVec spike(n, Rat(-1));
  spike[0] = n - 1;
  families.push_back(make_family(n, FamilyMode::KirwanHull, {spike}));

  while (static_cast<int>(families.size()) < (count + 3) / 4 + 1)
    families.push_back(random_family(rng, n, 2));

  const NormKind kinds[] = {NormKind::Hofer, NormKind::Second, NormKind::OneSidedPlus,
                            NormKind::OneSidedMinus};
  for (int i = 0; i < count; ++i)
    battery.emplace_back(families[i % families.size()], kinds[i % 4]);
  return battery;
}

}  // namespace hofer::sampling
