#include "cbend/holonomy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace cbend {

void check_decoration(const Triangulation& t, const Decoration& d, double tol) {
  if (d.size() != t.edges.size())
    throw Error(ErrorKind::DegenerateValue, "decoration has " + std::to_string(d.size()) +
                                                " values for " + std::to_string(t.edges.size()) + " edges");
  for (std::size_t e = 0; e < d.size(); ++e)
    if (!std::isfinite(d[e].real()) || !std::isfinite(d[e].imag()) || std::abs(d[e]) < tol ||
        std::abs(d[e] + 1.0) < tol)
      throw Error(ErrorKind::DegenerateValue, "edge " + std::to_string(e) + " decorated by 0 or -1");
}

Decoration make_regular(const std::vector<double>& moduli, double theta) {
  Decoration d;
  d.reserve(moduli.size());
  for (std::size_t e = 0; e < moduli.size(); ++e) {
    if (!(moduli[e] > 0.0))
      throw Error(ErrorKind::NonPositiveParameter, "modulus of edge " + std::to_string(e) + " must be positive");
    const cplx z = std::polar(moduli[e], theta);
    if (std::abs(z + 1.0) < kDecorationTol)
      throw Error(ErrorKind::DegenerateValue, "edge " + std::to_string(e) + " decorated by -1");
    d.push_back(z);
  }
  return d;
}

Decoration make_regular(const RegularDecoration& r) { return make_regular(r.moduli, r.theta); }

Decoration conjugate(const Decoration& d) {
  Decoration out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = std::conj(d[i]);
  return out;
}

Representation::Representation(const Triangulation& t, Decoration d)
    : tri(&t), decoration(std::move(d)), graph(build_modified_dual(t)), bipartite(is_bipartite(t)) {
  check_decoration(t, decoration);
}

namespace {

// Path products are accumulated in quad precision: relator loops on random
// decorations pass through norms ~1e6, which leaves double (and long double)
// without the digits a 1e-8 residual needs.
using XReal = boost::multiprecision::cpp_bin_float_quad;
using XCplx = boost::multiprecision::cpp_complex_quad;
using XMatrix = std::array<std::array<XCplx, 3>, 3>;

XMatrix x_identity() {
  XMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = XCplx(i == j ? 1 : 0);
  return m;
}

XMatrix x_mul(const XMatrix& a, const XMatrix& b, bool conj_b) {
  XMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      XCplx acc(0);
      for (int k = 0; k < 3; ++k) acc += a[i][k] * (conj_b ? XCplx(conj(b[k][j])) : b[k][j]);
      r[i][j] = acc;
    }
  return r;
}

struct XIsometry {
  XMatrix m = x_identity();
  bool anti = false;
};

XIsometry x_edge(const Representation& rep, const DualStep& step) {
  static const XReal r2 = sqrt(XReal(2));
  const DualEdge& e = rep.graph.edges.at(step.edge);
  XIsometry g;
  for (auto& row : g.m) row.fill(XCplx(0));
  if (e.type == 1) {
    const cplx zd = rep.decoration.at(e.tri_edge);
    const XCplx z(XReal(zd.real()), XReal(zd.imag()));
    const XReal x = sqrt(XReal(zd.real()) * zd.real() + XReal(zd.imag()) * zd.imag());
    g.m[0][2] = XCplx(x);
    g.m[1][1] = z / XCplx(x);
    g.m[2][0] = XCplx(XReal(1) / x);
    g.anti = true;
  } else if (step.forward) {
    g.m = {{{XCplx(-1), XCplx(r2), XCplx(1)}, {XCplx(-r2), XCplx(1), XCplx(0)}, {XCplx(1), XCplx(0), XCplx(0)}}};
  } else {
    g.m = {{{XCplx(0), XCplx(0), XCplx(1)}, {XCplx(0), XCplx(1), XCplx(r2)}, {XCplx(1), XCplx(-r2), XCplx(-1)}}};
  }
  return g;
}

XIsometry x_path(const Representation& rep, const SimplicialPath& p) {
  path_end(rep.graph, p);
  XIsometry acc;
  for (const auto& s : p.steps) {
    const XIsometry g = x_edge(rep, s);
    acc.m = x_mul(acc.m, g.m, acc.anti);
    acc.anti = acc.anti != g.anti;
  }
  return acc;
}

Isometry to_double(const XIsometry& g) {
  Isometry r;
  r.antiholomorphic = g.anti;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.matrix(i, j) = cplx(static_cast<double>(real(g.m[i][j])), static_cast<double>(imag(g.m[i][j])));
  return r;
}

double scalar_residual(const XMatrix& m) {
  const XCplx w = (m[0][0] + m[1][1] + m[2][2]) / XCplx(3);
  const XReal aw = abs(w);
  if (aw == 0) return std::numeric_limits<double>::infinity();
  XReal sq = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const XReal d = abs(i == j ? XCplx(m[i][j] - w) : m[i][j]);
      sq += d * d;
    }
  return static_cast<double>(sqrt(sq) / aw);
}

}  // namespace

Isometry edge_isometry(const Representation& rep, const DualStep& step) {
  const DualEdge& e = rep.graph.edges.at(step.edge);
  if (e.type == 1) return elementary_sigma(rep.decoration.at(e.tri_edge));
  return step.forward ? elementary_E() : elementary_E_inverse();
}

Isometry path_isometry(const Representation& rep, const SimplicialPath& p) {
  return to_double(x_path(rep, p));
}

double crossing_modulus_product(const Triangulation& t, const Decoration& d, int puncture) {
  double prod = 1.0;
  for (int e : peripheral_cycle(t, puncture).crossed_edges) prod *= std::abs(d.at(e));
  return prod;
}

bool is_balanced(const Triangulation& t, const Decoration& d, int puncture, double tol) {
  return std::abs(crossing_modulus_product(t, d, puncture) - 1.0) <= tol;
}

Isometry peripheral_holonomy(const Representation& rep, int puncture) {
  if (!rep.bipartite) throw Error(ErrorKind::NotBipartite, "peripheral holonomy needs a bipartite triangulation");
  return path_isometry(rep, peripheral_cycle(*rep.tri, puncture).path);
}

IsometryClass classify_peripheral(const Representation& rep, int puncture, const ClassifyOptions& opt) {
  return classify(peripheral_holonomy(rep, puncture), opt);
}

Isometry word_isometry(const std::vector<Isometry>& generators, const Word& w) {
  Isometry g = identity_isometry();
  for (int x : w) {
    const Isometry& h = generators.at(std::abs(x) - 1);
    g = compose(g, x > 0 ? h : inverse(h));
  }
  return g;
}

namespace {

// Phase-aligned distance between the Frobenius-normalized matrices.
double matrix_projective_distance(const GroupMatrix& a, const GroupMatrix& b) {
  const GroupMatrix x = a / a.norm(), y = b / b.norm();
  const cplx s = (y.adjoint() * x).trace();
  const cplx phase = std::abs(s) > 0.0 ? s / std::abs(s) : cplx(1.0);
  return (x - phase * y).norm();
}

// min over split points k of dist(F_1..F_k, (F_{k+1}..F_m)^{-1}).
double split_residual(const std::vector<Isometry>& f) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k <= f.size(); ++k) {
    Isometry left = identity_isometry(), right = identity_isometry();
    for (std::size_t i = 0; i < k; ++i) left = compose(left, f[i]);
    for (std::size_t i = f.size(); i-- > k;) right = compose(right, inverse(f[i]));
    if (left.antiholomorphic != right.antiholomorphic) continue;
    best = std::min(best, matrix_projective_distance(left.matrix, right.matrix));
  }
  return best;
}

}  // namespace

SurfaceGroupHolonomy surface_group_holonomy(const Representation& rep) {
  SurfaceGroupHolonomy out;
  out.system = generator_system(*rep.tri);
  for (const auto& loop : out.system.pairing_loops) out.pairing.push_back(path_isometry(rep, loop));
  for (const auto& w : out.system.a) out.a.push_back(word_isometry(out.pairing, w));
  for (const auto& w : out.system.b) out.b.push_back(word_isometry(out.pairing, w));
  for (const auto& loop : out.system.c) out.c.push_back(path_isometry(rep, loop));

  const XIsometry rel = x_path(rep, relator_path(*rep.tri, out.system));
  out.relator = to_double(rel);
  out.relator_residual = scalar_residual(rel.m);

  std::vector<Isometry> factors;
  for (std::size_t i = 0; i < out.a.size(); ++i)
    for (const Isometry& g : {out.a[i], out.b[i], inverse(out.a[i]), inverse(out.b[i])}) factors.push_back(g);
  factors.insert(factors.end(), out.c.begin(), out.c.end());
  out.direct_residual = split_residual(factors);
  return out;
}

bool holonomy_flag_check(const Representation& rep) {
  const GeneratorSystem gs = generator_system(*rep.tri);
  for (const auto& loop : gs.pairing_loops)
    if (path_isometry(rep, loop).antiholomorphic) return false;
  for (const auto& loop : gs.c)
    if (path_isometry(rep, loop).antiholomorphic) return false;
  return true;
}

}  // namespace cbend
