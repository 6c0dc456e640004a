#pragma once

#include <vector>

#include "cbend/isometry.hpp"
#include "cbend/surface.hpp"

namespace cbend {

// Edge id -> complex value avoiding 0 and -1.
using Decoration = std::vector<cplx>;

struct RegularDecoration {
  double theta = 0.0;
  std::vector<double> moduli;
};

inline constexpr double kDecorationTol = 1e-9;

// Throws DegenerateValue on a value within tol of 0 or -1, or a size mismatch.
void check_decoration(const Triangulation& t, const Decoration& d, double tol = kDecorationTol);

// D(e) = d(e) e^{i theta}. Throws DegenerateValue or NonPositiveParameter.
Decoration make_regular(const std::vector<double>& moduli, double theta);
Decoration make_regular(const RegularDecoration& r);

Decoration conjugate(const Decoration& d);

struct Representation {
  Representation(const Triangulation& t, Decoration d);

  const Triangulation* tri;
  Decoration decoration;
  ModifiedDualGraph graph;
  bool bipartite;
};

// Type 1 over edge e: sigma_{D(e)}. Type 2: E forward, E^{-1} backward.
Isometry edge_isometry(const Representation& rep, const DualStep& step);

// A_{s1} A_{s2} ... A_{sk}. Throws InvalidPath.
Isometry path_isometry(const Representation& rep, const SimplicialPath& p);

// Product of |D| over the crossings around a puncture, with multiplicity.
double crossing_modulus_product(const Triangulation& t, const Decoration& d, int puncture);
bool is_balanced(const Triangulation& t, const Decoration& d, int puncture, double tol = kDecorationTol);

// Holonomy along the positive peripheral cycle. Throws NotBipartite.
Isometry peripheral_holonomy(const Representation& rep, int puncture);
IsometryClass classify_peripheral(const Representation& rep, int puncture,
                                  const ClassifyOptions& opt = {});

struct SurfaceGroupHolonomy {
  GeneratorSystem system;
  std::vector<Isometry> pairing;  // images of the pairing loops
  std::vector<Isometry> a, b, c;
  Isometry relator;               // image of the reduced relator loop
  double relator_residual = 0.0;  // relative distance of relator from a scalar
  // Same relator multiplied out from the generator images. Loses digits as
  // the generator norms grow; reported for diagnostics only.
  double direct_residual = 0.0;
};

Isometry word_isometry(const std::vector<Isometry>& generators, const Word& w);

// Images of a_i, b_i, c_j and the residual of prod [a_i,b_i] prod c_j from the identity.
// The residual is measured on the relator loop itself, after cancelling
// backtracks, which keeps intermediate products small.
SurfaceGroupHolonomy surface_group_holonomy(const Representation& rep);

// True iff every pairing loop and peripheral loop maps to a holomorphic isometry.
bool holonomy_flag_check(const Representation& rep);

}  // namespace cbend
