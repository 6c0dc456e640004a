#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

namespace cbend {

using cplx = std::complex<double>;
using HVector = Eigen::Vector3cd;
using GroupMatrix = Eigen::Matrix3cd;

inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kMembershipTol = 1e-9;

// Point of the boundary sphere: either infinity or Heisenberg [z, t].
struct BoundaryPoint {
  bool infinity = false;
  cplx z{};
  double t = 0.0;

  static BoundaryPoint at_infinity() { return {true, {}, 0.0}; }
  static BoundaryPoint heisenberg(cplx z, double t) { return {false, z, t}; }
};

// Interior point in horospherical coordinates, u > 0.
struct HoroPoint {
  cplx z{};
  double t = 0.0;
  double u = 1.0;
};

using Point = std::variant<BoundaryPoint, HoroPoint>;

// The form J: antidiagonal ones.
const GroupMatrix& form_J();

// <X, Y> = X^T J conj(Y).
cplx herm_product(const HVector& x, const HVector& y);

HVector lift(const BoundaryPoint& p);
HVector lift(const HoroPoint& p);
HVector lift(const Point& p);

// Projectivize a null or negative vector. Throws PositiveVector.
Point project_point(const HVector& v, double tol = kMembershipTol);

// Reads a boundary point from a vector assumed null; no sign check.
BoundaryPoint project_boundary(const HVector& v);

double distance(const HoroPoint& m, const HoroPoint& n);

// Orthogonal projection onto the standard real plane, lifted.
// Throws DegenerateProjection when <v, conj v> vanishes.
HVector project_to_standard_real_plane(const HVector& v, double tol = kMembershipTol);

// Chordal distance between the complex lines spanned by u and v.
double projective_distance(const HVector& u, const HVector& v);

double point_distance(const BoundaryPoint& p, const BoundaryPoint& q);

// ||M^T J conj(M) - J|| (Frobenius); zero on U(2,1).
double unitarity_residual(const GroupMatrix& m);

}  // namespace cbend
