#include "cbend/triangle.hpp"

#include <cmath>
#include <numbers>

#include "cbend/errors.hpp"

namespace cbend {

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::array<HVector, 3> unit_lifts(const IdealTriangle& t) {
  return {lift(t.p[0]).normalized(), lift(t.p[1]).normalized(), lift(t.p[2]).normalized()};
}

void check_nondegenerate(const std::array<HVector, 3>& q) {
  for (int i = 0; i < 3; ++i)
    if (std::abs(herm_product(q[i], q[(i + 1) % 3])) <= 1e-12)
      throw Error(ErrorKind::DegenerateTriangle, "triangle has coincident vertices");
}

bool same_point(const BoundaryPoint& a, const BoundaryPoint& b, double tol) {
  return point_distance(a, b) <= tol;
}

}  // namespace

IdealTriangle standard_triangle() {
  return {{BoundaryPoint::at_infinity(), BoundaryPoint::heisenberg(-1.0, 0.0),
           BoundaryPoint::heisenberg(0.0, 0.0)}};
}

double cartan(const IdealTriangle& t) {
  const auto q = unit_lifts(t);
  check_nondegenerate(q);
  const cplx triple = herm_product(q[0], q[1]) * herm_product(q[1], q[2]) * herm_product(q[2], q[0]);
  return std::arg(-triple);
}

HVector polar_vector(const HVector& p, const HVector& q) {
  const Eigen::Vector3cd a = form_J() * p.conjugate();
  const Eigen::Vector3cd b = form_J() * q.conjugate();
  // Eigen's cross() conjugates complex results; spell it out.
  return HVector(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0));
}

cplx z_invariant_raw(const IdealTriangle& t1, const IdealTriangle& t2) {
  const HVector p1 = lift(t1.p[0]).normalized();
  const HVector p2 = lift(t1.p[1]).normalized();
  const HVector p3 = lift(t1.p[2]).normalized();
  const HVector p4 = lift(t2.p[1]).normalized();
  const HVector c = polar_vector(p1, p3);
  return -herm_product(p4, c) * herm_product(p2, p1) /
         (herm_product(p2, c) * herm_product(p4, p1));
}

cplx z_invariant(const IdealTriangle& t1, const IdealTriangle& t2, const TriangleOptions& opt) {
  if (std::abs(cartan(t1)) > opt.real_tol || std::abs(cartan(t2)) > opt.real_tol)
    throw Error(ErrorKind::NotReal, "Z is defined for real ideal triangles");
  if (!same_point(t2.p[0], t1.p[2], opt.adjacency_tol) ||
      !same_point(t2.p[2], t1.p[0], opt.adjacency_tol))
    throw Error(ErrorKind::NotAdjacent, "expected t1 = (p1,p2,p3), t2 = (p3,p4,p1)");
  const cplx z = z_invariant_raw(t1, t2);
  if (std::abs(z) < opt.degenerate_tol || std::abs(z + 1.0) < opt.degenerate_tol)
    throw Error(ErrorKind::DegeneratePair, "Z is 0 or -1");
  return z;
}

Isometry triangle_to_standard(const IdealTriangle& t, bool real_required,
                              const TriangleOptions& opt) {
  const auto q = unit_lifts(t);
  check_nondegenerate(q);
  const cplx a = herm_product(q[0], q[1]);
  const cplx b = herm_product(q[1], q[2]);
  const cplx c = herm_product(q[2], q[0]);
  const double angle = std::arg(-(a * b * c));
  if (real_required && std::abs(angle) > opt.real_tol)
    throw Error(ErrorKind::NotReal, "triangle is not contained in a real plane");
  if (std::abs(std::cos(angle)) < 1e-9)
    throw Error(ErrorKind::DegenerateTriangle, "triangle lies in a complex line");
  const double s = real_required ? 0.0 : -std::tan(angle);
  const cplx g(-1.0, s);

  const double mu = std::sqrt(std::abs(b / (g * std::conj(a * c))));
  const cplx l1 = mu;
  const cplx l2 = std::conj(1.0 / (mu * a));
  const cplx l3 = 1.0 / (mu * c);

  GroupMatrix qm, sm;
  qm.col(0) = l1 * q[0];
  qm.col(1) = l2 * q[1];
  qm.col(2) = l3 * q[2];
  sm.col(0) = HVector(1.0, 0.0, 0.0);
  sm.col(1) = HVector(g, -kSqrt2, 1.0);
  sm.col(2) = HVector(0.0, 0.0, 1.0);
  return {su_normalize(sm * qm.inverse()), false};
}

BoundaryPoint extend_by_z(const IdealTriangle& t, cplx z, const TriangleOptions& opt) {
  if (std::abs(z) < opt.degenerate_tol || std::abs(z + 1.0) < opt.degenerate_tol)
    throw Error(ErrorKind::DegenerateZ, "z must avoid 0 and -1");
  const Isometry g = triangle_to_standard(t, true, opt);
  return apply(inverse(g), BoundaryPoint::heisenberg(z, 0.0));
}

Isometry pair_symmetry(const IdealTriangle& t1, const IdealTriangle& t2,
                       const TriangleOptions& opt) {
  const cplx z = z_invariant(t1, t2, opt);
  const Isometry g = triangle_to_standard(t1, true, opt);
  return compose(inverse(g), compose(elementary_sigma(z), g));
}

}  // namespace cbend
