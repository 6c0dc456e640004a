#pragma once

#include <array>

#include "cbend/isometry.hpp"

namespace cbend {

struct IdealTriangle {
  std::array<BoundaryPoint, 3> p;
};

// (inf, [-1,0], [0,0]).
IdealTriangle standard_triangle();

struct TriangleOptions {
  double real_tol = 1e-7;        // |cartan| bound for "real"
  double degenerate_tol = 1e-9;  // Z too close to 0 or -1
  double adjacency_tol = 1e-7;   // projective distance for shared vertices
};

// arg(-<p1,p2><p2,p3><p3,p1>), in [-pi/2, pi/2]. Throws DegenerateTriangle.
double cartan(const IdealTriangle& t);

// Polar vector of the complex line through two points.
HVector polar_vector(const HVector& p, const HVector& q);

// t1 = (p1,p2,p3), t2 = (p3,p4,p1).
// Throws NotReal, NotAdjacent, DegeneratePair.
cplx z_invariant(const IdealTriangle& t1, const IdealTriangle& t2,
                 const TriangleOptions& opt = {});

// Same formula without realness and degeneracy checks.
cplx z_invariant_raw(const IdealTriangle& t1, const IdealTriangle& t2);

// d with z_invariant(t, (c, d, a)) = z, for t = (a, b, c). Throws DegenerateZ, NotReal.
BoundaryPoint extend_by_z(const IdealTriangle& t, cplx z, const TriangleOptions& opt = {});

// Antiholomorphic involution with a <-> c and b <-> d.
Isometry pair_symmetry(const IdealTriangle& t1, const IdealTriangle& t2,
                       const TriangleOptions& opt = {});

// Holomorphic g with g(t) = (inf, [-1,s], [0,0]); s = -tan(cartan), so s = 0 for real t.
// Throws NotReal when real_required and |cartan| > real_tol.
Isometry triangle_to_standard(const IdealTriangle& t, bool real_required = true,
                              const TriangleOptions& opt = {});

}  // namespace cbend
