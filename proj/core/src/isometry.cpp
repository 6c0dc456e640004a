#include "cbend/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "cbend/errors.hpp"

namespace cbend {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const cplx kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
}  // namespace

const char* to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::Loxodromic: return "Loxodromic";
    case IsometryClass::RegularElliptic: return "RegularElliptic";
    case IsometryClass::Parabolic: return "Parabolic";
    case IsometryClass::ComplexReflection: return "ComplexReflection";
    case IsometryClass::Identity: return "Identity";
  }
  return "Unknown";
}

Isometry identity_isometry() { return {}; }

HVector apply_vector(const Isometry& g, const HVector& v) {
  return g.antiholomorphic ? HVector(g.matrix * v.conjugate()) : HVector(g.matrix * v);
}

BoundaryPoint apply(const Isometry& g, const BoundaryPoint& p) {
  return project_boundary(apply_vector(g, lift(p)));
}

Point apply_point(const Isometry& g, const Point& p) {
  if (const auto* b = std::get_if<BoundaryPoint>(&p)) return apply(g, *b);
  return project_point(apply_vector(g, lift(std::get<HoroPoint>(p))));
}

Isometry compose(const Isometry& g, const Isometry& h) {
  Isometry r;
  r.matrix = g.antiholomorphic ? GroupMatrix(g.matrix * h.matrix.conjugate())
                               : GroupMatrix(g.matrix * h.matrix);
  r.antiholomorphic = g.antiholomorphic != h.antiholomorphic;
  return r;
}

namespace {

// Long words give matrices with norm ~1e5 whose cofactor determinant and
// inverse lose every digit. LU keeps the determinant, and the form adjoint
// J M^* J inverts a scaled U(2,1) matrix without cancellation.
cplx stable_det(const GroupMatrix& m) { return Eigen::PartialPivLU<GroupMatrix>(m).determinant(); }

GroupMatrix form_inverse(const GroupMatrix& m) {
  const double s = std::pow(std::abs(stable_det(m)), 2.0 / 3.0);
  return form_J() * m.adjoint() * form_J() / s;
}

}  // namespace

Isometry inverse(const Isometry& g) {
  Isometry r;
  r.antiholomorphic = g.antiholomorphic;
  r.matrix = g.antiholomorphic ? GroupMatrix(form_inverse(g.matrix).conjugate())
                               : form_inverse(g.matrix);
  return r;
}

GroupMatrix su_normalize(const GroupMatrix& m) {
  const cplx c = std::pow(stable_det(m), 1.0 / 3.0);
  return m / c;
}

double trace_discriminant(cplx tau) {
  const double a2 = std::norm(tau);
  return a2 * a2 - 8.0 * (tau * tau * tau).real() + 18.0 * a2 - 27.0;
}

cplx canonical_trace(const GroupMatrix& m) {
  const cplx tau = su_normalize(m).trace();
  cplx best = tau;
  for (cplx w : {kOmega, kOmega * kOmega})
    if ((w * tau).real() > best.real()) best = w * tau;
  return best;
}

IsometryClass classify(const Isometry& g, const ClassifyOptions& opt) {
  if (g.antiholomorphic)
    throw Error(ErrorKind::NotHolomorphic, "classify expects a holomorphic isometry");
  const GroupMatrix m = su_normalize(g.matrix);
  const double f = trace_discriminant(m.trace());
  if (f > opt.f_eps) return IsometryClass::Loxodromic;
  if (f < -opt.f_eps) return IsometryClass::RegularElliptic;
  if (projective_residual(m, GroupMatrix::Identity()) <= opt.identity_tol)
    return IsometryClass::Identity;

  Eigen::ComplexEigenSolver<GroupMatrix> es(m, false);
  const Eigen::Vector3cd ev = es.eigenvalues();
  int bi = 0, bj = 1;
  double best = std::abs(ev(0) - ev(1));
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
    const double d = std::abs(ev(i) - ev(j));
    if (d < best) best = d, bi = i, bj = j;
  }
  const cplx lambda = 0.5 * (ev(bi) + ev(bj));
  Eigen::JacobiSVD<GroupMatrix> svd_m(m);
  const double scale = std::max(1.0, svd_m.singularValues()(0));
  Eigen::JacobiSVD<GroupMatrix> svd(m - lambda * GroupMatrix::Identity());
  int rank = 0;
  for (int k = 0; k < 3; ++k)
    if (svd.singularValues()(k) > opt.rank_cutoff * scale) ++rank;
  if (rank >= 2) return IsometryClass::Parabolic;
  // Rank one: a complex reflection, unless the third eigenvalue also collapses
  // onto the pair (vertical Heisenberg translations).
  const cplx third = ev(3 - bi - bj);
  return std::abs(third - lambda) > 1e-4 ? IsometryClass::ComplexReflection
                                         : IsometryClass::Parabolic;
}

double projective_residual(const GroupMatrix& g, const GroupMatrix& h) {
  const GroupMatrix k = g * form_inverse(h);
  const cplx w = k.trace() / 3.0;
  if (std::abs(w) == 0.0) return std::numeric_limits<double>::infinity();
  return (k - w * GroupMatrix::Identity()).norm() / std::abs(w);
}

bool projective_equal(const Isometry& g, const Isometry& h, double tol) {
  if (g.antiholomorphic != h.antiholomorphic)
    throw Error(ErrorKind::FlagMismatch, "holomorphic and antiholomorphic maps compared");
  return projective_residual(g.matrix, h.matrix) <= tol;
}

Isometry elementary_E() {
  GroupMatrix m;
  m << -1.0, kSqrt2, 1.0,
       -kSqrt2, 1.0, 0.0,
       1.0, 0.0, 0.0;
  return {m, false};
}

Isometry elementary_E_inverse() {
  // Exact inverse; E^3 = -I.
  GroupMatrix m;
  m << 0.0, 0.0, 1.0,
       0.0, 1.0, kSqrt2,
       1.0, -kSqrt2, -1.0;
  return {m, false};
}

Isometry elementary_sigma(cplx z) {
  const double x = std::abs(z);
  if (x == 0.0) throw Error(ErrorKind::ZeroArgument, "sigma_z needs z != 0");
  GroupMatrix m = GroupMatrix::Zero();
  m(0, 2) = x;
  m(1, 1) = z / x;
  m(2, 0) = 1.0 / x;
  return {m, true};
}

Isometry translation_T(cplx z, double t) {
  GroupMatrix m = GroupMatrix::Identity();
  m(0, 1) = -std::conj(z) * kSqrt2;
  m(0, 2) = cplx(-std::norm(z), t);
  m(1, 2) = z * kSqrt2;
  return {m, false};
}

Isometry loxodromic_D(cplx lambda) {
  if (std::abs(std::abs(lambda) - 1.0) <= kAlgebraTol)
    throw Error(ErrorKind::UnitModulus, "|lambda| = 1 is not loxodromic");
  GroupMatrix m = GroupMatrix::Zero();
  m(0, 0) = lambda;
  m(1, 1) = std::conj(lambda) / lambda;
  m(2, 2) = 1.0 / std::conj(lambda);
  return {m, false};
}

}  // namespace cbend
