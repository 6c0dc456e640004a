#pragma once

#include <vector>

#include "cbend/isometry.hpp"

namespace cbend {

// antidiag(r^2, e^{i theta}, 1/r^2). Throws NonPositiveParameter.
Isometry leaf_symmetry_2(double theta, double r2);
// E D_r antidiag(1, e^{i theta}, 1) D_{1/r} E^{-1}, conjugated as an antiholomorphic lift.
Isometry leaf_symmetry_3(double theta, double r3);

// tr(M2 conj(M3)) from the matrices.
cplx certificate_trace(double theta, double r2, double r3);
// 2 r3^2 e^{i theta} + (2/r2^2) e^{-i theta} + 1 + r2^2 r3^2 + 1/(r2^2 r3^2) + r3^2/r2^2.
cplx certificate_trace_closed_form(double theta, double r2, double r3);

struct CertificatePoint {
  double theta = 0.0, r2 = 1.0, r3 = 1.0;
  cplx trace{};
  double closed_form_gap = 0.0;
  double margin = 0.0;  // Re trace - 3
  IsometryClass cls = IsometryClass::Identity;
};

struct CertificateReport {
  std::vector<CertificatePoint> points;
  double min_re = 0.0;
  double min_margin = 0.0;
  double max_closed_form_gap = 0.0;
  int loxodromic = 0;
  bool all_above = true;       // Re trace >= 3 everywhere
  bool angle_in_range = true;  // |theta| <= pi/2
  bool pass() const { return !angle_in_range || (all_above && loxodromic == static_cast<int>(points.size())); }
};

// n logarithmically spaced values in [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);

CertificateReport certify(double theta, const std::vector<double>& r2s, const std::vector<double>& r3s,
                          const ClassifyOptions& opt = {});

enum class Position { Disjoint, Asymptotic, Intersecting };
const char* to_string(Position p);

// Throws NotSymmetry unless both are antiholomorphic involutions.
Position position_of_real_symmetries(const Isometry& s1, const Isometry& s2, double tol = 1e-9,
                                     const ClassifyOptions& opt = {});

}  // namespace cbend
