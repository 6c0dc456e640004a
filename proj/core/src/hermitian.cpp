#include "cbend/hermitian.hpp"

#include <cmath>

#include "cbend/errors.hpp"

namespace cbend {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::PositiveVector: return "PositiveVector";
    case ErrorKind::DegenerateProjection: return "DegenerateProjection";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::UnitModulus: return "UnitModulus";
    case ErrorKind::FlagMismatch: return "FlagMismatch";
    case ErrorKind::NotHolomorphic: return "NotHolomorphic";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::NotReal: return "NotReal";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::DegenerateZ: return "DegenerateZ";
    case ErrorKind::InvalidSignature: return "InvalidSignature";
    case ErrorKind::NotInternalEdge: return "NotInternalEdge";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::DegenerateValue: return "DegenerateValue";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::NotSymmetry: return "NotSymmetry";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::MissingProvenance: return "MissingProvenance";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

const GroupMatrix& form_J() {
  static const GroupMatrix j = [] {
    GroupMatrix m = GroupMatrix::Zero();
    m(0, 2) = 1.0;
    m(1, 1) = 1.0;
    m(2, 0) = 1.0;
    return m;
  }();
  return j;
}

cplx herm_product(const HVector& x, const HVector& y) {
  return x(0) * std::conj(y(2)) + x(1) * std::conj(y(1)) + x(2) * std::conj(y(0));
}

HVector lift(const BoundaryPoint& p) {
  if (p.infinity) return HVector(1.0, 0.0, 0.0);
  return HVector(cplx(-std::norm(p.z), p.t), p.z * kSqrt2, 1.0);
}

HVector lift(const HoroPoint& p) {
  return HVector(cplx(-std::norm(p.z) - p.u, p.t), p.z * kSqrt2, 1.0);
}

HVector lift(const Point& p) {
  return std::visit([](const auto& q) { return lift(q); }, p);
}

Point project_point(const HVector& v, double tol) {
  const double n2 = v.squaredNorm();
  if (n2 == 0.0) throw Error(ErrorKind::PositiveVector, "zero vector");
  const double self = herm_product(v, v).real() / n2;
  if (self > tol) throw Error(ErrorKind::PositiveVector, "vector is positive");
  if (std::abs(v(2)) <= 1e-13 * std::sqrt(n2)) return BoundaryPoint::at_infinity();
  const HVector w = v / v(2);
  const cplx z = w(1) / kSqrt2;
  const double t = w(0).imag();
  if (std::abs(self) <= tol) return BoundaryPoint::heisenberg(z, t);
  const double u = -w(0).real() - std::norm(z);
  return HoroPoint{z, t, u};
}

BoundaryPoint project_boundary(const HVector& v) {
  const double n = v.norm();
  if (std::abs(v(2)) <= 1e-13 * n) return BoundaryPoint::at_infinity();
  const HVector w = v / v(2);
  return BoundaryPoint::heisenberg(w(1) / kSqrt2, w(0).imag());
}

double distance(const HoroPoint& m, const HoroPoint& n) {
  const HVector a = lift(m), b = lift(n);
  const double num = std::norm(herm_product(a, b));
  const double den = herm_product(a, a).real() * herm_product(b, b).real();
  const double c2 = std::max(1.0, num / den);
  return 2.0 * std::acosh(std::sqrt(c2));
}

HVector project_to_standard_real_plane(const HVector& v, double tol) {
  const HVector vc = v.conjugate();
  const cplx p = herm_product(v, vc);
  if (std::abs(p) <= tol * v.squaredNorm())
    throw Error(ErrorKind::DegenerateProjection, "<v, conj v> vanishes");
  return v - (p / std::abs(p)) * vc;
}

double projective_distance(const HVector& u, const HVector& v) {
  const HVector a = u.normalized(), b = v.normalized();
  const cplx s = a.dot(b);
  if (std::abs(s) == 0.0) return std::sqrt(2.0);
  return (b - (s / std::abs(s)) * a).norm();
}

double point_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  return projective_distance(lift(p), lift(q));
}

double unitarity_residual(const GroupMatrix& m) {
  return (m.transpose() * form_J() * m.conjugate() - form_J()).norm();
}

}  // namespace cbend
