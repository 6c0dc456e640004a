#pragma once

#include "cbend/hermitian.hpp"

namespace cbend {

// Holomorphic: p -> P(M p). Antiholomorphic: p -> P(M conj(p)).
struct Isometry {
  GroupMatrix matrix = GroupMatrix::Identity();
  bool antiholomorphic = false;
};

enum class IsometryClass { Loxodromic, RegularElliptic, Parabolic, ComplexReflection, Identity };

const char* to_string(IsometryClass c);

struct ClassifyOptions {
  double f_eps = 1e-7;        // band around f = 0
  double rank_cutoff = 1e-7;  // relative singular-value cutoff
  double identity_tol = 1e-9;
};

Isometry identity_isometry();

HVector apply_vector(const Isometry& g, const HVector& v);
BoundaryPoint apply(const Isometry& g, const BoundaryPoint& p);
Point apply_point(const Isometry& g, const Point& p);

// g o h.
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);

// Divides by the principal cube root of det.
GroupMatrix su_normalize(const GroupMatrix& m);

// f(tau) = |tau|^4 - 8 Re(tau^3) + 18 |tau|^2 - 27.
double trace_discriminant(cplx tau);

// SU(2,1) trace rotated by the cube root of unity that maximizes its real part.
cplx canonical_trace(const GroupMatrix& m);

IsometryClass classify(const Isometry& g, const ClassifyOptions& opt = {});

bool projective_equal(const Isometry& g, const Isometry& h, double tol = kMembershipTol);

// Relative residual of G H^{-1} from the nearest scalar matrix. H must be a
// scalar multiple of a U(2,1) matrix; it is inverted through the form.
double projective_residual(const GroupMatrix& g, const GroupMatrix& h);

// Order-3 regular elliptic cycling inf -> [-1,0] -> [0,0] -> inf.
Isometry elementary_E();
Isometry elementary_E_inverse();

// Real symmetry swapping inf <-> [0,0] and [-1,0] <-> [z,0]. Throws ZeroArgument.
Isometry elementary_sigma(cplx z);

// Heisenberg translation taking [0,0] to [z,t].
Isometry translation_T(cplx z, double t);

// diag(lambda, conj(lambda)/lambda, 1/conj(lambda)). Throws UnitModulus.
Isometry loxodromic_D(cplx lambda);

}  // namespace cbend
