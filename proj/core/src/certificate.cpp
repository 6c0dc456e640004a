#include "cbend/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cbend/errors.hpp"

namespace cbend {

namespace {

void require_positive(double r) {
  if (!(r > 0.0)) throw Error(ErrorKind::NonPositiveParameter, "leaf parameter must be positive");
}

// diag(r, 1, 1/r); the real case of D_lambda, allowed at r = 1.
Isometry real_scaling(double r) {
  GroupMatrix m = GroupMatrix::Zero();
  m(0, 0) = r;
  m(1, 1) = 1.0;
  m(2, 2) = 1.0 / r;
  return {m, false};
}

Isometry base_symmetry(double theta) {
  GroupMatrix m = GroupMatrix::Zero();
  m(0, 2) = 1.0;
  m(1, 1) = std::polar(1.0, theta);
  m(2, 0) = 1.0;
  return {m, true};
}

bool is_involution(const Isometry& s, double tol) {
  if (!s.antiholomorphic) return false;
  return projective_residual(s.matrix * s.matrix.conjugate(), GroupMatrix::Identity()) <= tol;
}

}  // namespace

Isometry leaf_symmetry_2(double theta, double r2) {
  require_positive(r2);
  return compose(real_scaling(r2), compose(base_symmetry(theta), real_scaling(1.0 / r2)));
}

Isometry leaf_symmetry_3(double theta, double r3) {
  require_positive(r3);
  const Isometry inner = leaf_symmetry_2(theta, r3);
  return compose(elementary_E(), compose(inner, elementary_E_inverse()));
}

cplx certificate_trace(double theta, double r2, double r3) {
  return compose(leaf_symmetry_2(theta, r2), leaf_symmetry_3(theta, r3)).matrix.trace();
}

cplx certificate_trace_closed_form(double theta, double r2, double r3) {
  require_positive(r2);
  require_positive(r3);
  const double a = r2 * r2, b = r3 * r3;
  return 2.0 * b * std::polar(1.0, theta) + (2.0 / a) * std::polar(1.0, -theta) + 1.0 + a * b +
         1.0 / (a * b) + b / a;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  require_positive(lo);
  require_positive(hi);
  if (n < 1) throw Error(ErrorKind::NonPositiveParameter, "grid needs at least one step");
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double l0 = std::log(lo), l1 = std::log(hi);
  for (int i = 0; i < n; ++i) out[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

CertificateReport certify(double theta, const std::vector<double>& r2s, const std::vector<double>& r3s,
                          const ClassifyOptions& opt) {
  CertificateReport rep;
  rep.angle_in_range = std::abs(theta) <= std::numbers::pi / 2 + 1e-12;
  rep.min_re = std::numeric_limits<double>::infinity();
  for (double r2 : r2s)
    for (double r3 : r3s) {
      CertificatePoint p;
      p.theta = theta;
      p.r2 = r2;
      p.r3 = r3;
      const Isometry prod = compose(leaf_symmetry_2(theta, r2), leaf_symmetry_3(theta, r3));
      p.trace = prod.matrix.trace();
      p.closed_form_gap = std::abs(p.trace - certificate_trace_closed_form(theta, r2, r3));
      p.margin = p.trace.real() - 3.0;
      p.cls = classify(prod, opt);
      rep.min_re = std::min(rep.min_re, p.trace.real());
      rep.max_closed_form_gap = std::max(rep.max_closed_form_gap, p.closed_form_gap);
      if (p.trace.real() < 3.0) rep.all_above = false;
      if (p.cls == IsometryClass::Loxodromic) ++rep.loxodromic;
      rep.points.push_back(p);
    }
  rep.min_margin = rep.min_re - 3.0;
  return rep;
}

const char* to_string(Position p) {
  switch (p) {
    case Position::Disjoint: return "Disjoint";
    case Position::Asymptotic: return "Asymptotic";
    case Position::Intersecting: return "Intersecting";
  }
  return "Unknown";
}

Position position_of_real_symmetries(const Isometry& s1, const Isometry& s2, double tol,
                                     const ClassifyOptions& opt) {
  if (!is_involution(s1, tol) || !is_involution(s2, tol))
    throw Error(ErrorKind::NotSymmetry, "inputs must be antiholomorphic involutions");
  switch (classify(compose(s1, s2), opt)) {
    case IsometryClass::Loxodromic: return Position::Disjoint;
    case IsometryClass::Parabolic: return Position::Asymptotic;
    default: return Position::Intersecting;
  }
}

}  // namespace cbend
