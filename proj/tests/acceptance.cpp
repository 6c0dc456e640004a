// Runs the ten acceptance criteria and prints one line per criterion.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace cbend;
using cbend::testing::Rng;

namespace {

const std::vector<std::pair<int, int>> kSurfaces = {{1, 1}, {0, 3}, {1, 2}, {2, 1}, {0, 4}, {2, 2}};

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

bool is_projective_identity(const Isometry& g, double tol) {
  return !g.antiholomorphic && projective_equal(g, identity_isometry(), tol);
}

void elementary_algebra(Outcome& o) {
  Rng rng(101);
  const Isometry e = elementary_E();
  o.require(is_projective_identity(compose(e, compose(e, e)), 1e-12), "E^3");
  double worst = std::max(unitarity_residual(e.matrix), unitarity_residual(elementary_E_inverse().matrix));
  for (int i = 0; i < 50; ++i) {
    const cplx z = rng.nonzero_complex(0.05, 20.0);
    const Isometry s = elementary_sigma(z);
    o.require(is_projective_identity(compose(s, s), 1e-12), "sigma_z^2");
    worst = std::max(worst, unitarity_residual(s.matrix));
    worst = std::max(worst, unitarity_residual(translation_T(rng.nonzero_complex(), rng.uniform(-3, 3)).matrix));
    worst = std::max(worst, unitarity_residual(loxodromic_D(rng.nonzero_complex(1.1, 3.0)).matrix));
  }
  o.require(worst < 1e-12, "unitarity");
  o.note << "max U(2,1) residual " << worst;
}

void classification_oracle(Outcome& o) {
  Rng rng(102);
  int checked = 0, band = 0, bad = 0;
  for (int i = 0; i < 500; ++i) {
    const Isometry g = testing::random_word(rng, 12);
    const double f = trace_discriminant(su_normalize(g.matrix).trace());
    if (std::abs(f) < 1e-6) {
      ++band;
      continue;
    }
    ++checked;
    const bool lox = testing::max_eigen_modulus(g.matrix) > 1.0 + 1e-6;
    if ((classify(g) == IsometryClass::Loxodromic) != lox) ++bad;
  }
  o.require(bad == 0, "disagreement");
  o.note << checked << " words checked, " << band << " in f band, " << bad << " disagreements";
}

void z_round_trip(Outcome& o) {
  Rng rng(103);
  double worst_rt = 0.0, worst_swap = 0.0;
  for (int i = 0; i < 100; ++i) {
    const IdealTriangle t = testing::random_real_triangle(rng);
    const cplx z = rng.decoration_value();
    const IdealTriangle next{{t.p[2], extend_by_z(t, z), t.p[0]}};
    const cplx back = z_invariant(t, next);
    worst_rt = std::max(worst_rt, std::abs(back - z) / std::max(1.0, std::abs(z)));
    worst_swap = std::max(worst_swap, std::abs(z_invariant(next, t) - std::conj(back)));
  }
  o.require(worst_rt < 1e-9, "round trip");
  o.require(worst_swap < 1e-9, "swap conjugation");
  o.note << "round trip " << worst_rt << ", swap " << worst_swap;
}

void combinatorial_counts(Outcome& o) {
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    const std::string tag = "(" + std::to_string(g) + "," + std::to_string(n) + ")";
    o.require(static_cast<int>(t.faces.size()) == 4 * g - 4 + 2 * n, tag + " faces");
    o.require(static_cast<int>(t.edges.size()) == 6 * g - 6 + 3 * n, tag + " edges");
    o.require(validate(t).empty(), tag + " validate");
    const auto c = bipartite_coloring(t);
    bool proper = true;
    for (int v = 0; v < 3 * static_cast<int>(t.faces.size()); ++v)
      proper = proper && c[dual_face(v)] != c[dual_face(t.across(v))];
    o.require(proper, tag + " coloring");
    const ModifiedDualGraph d = build_modified_dual(t);
    o.require(d.num_vertices == 2 * static_cast<int>(t.edges.size()), tag + " dual vertices");
    const auto deg = d.degrees();
    o.require(std::all_of(deg.begin(), deg.end(), [](int x) { return x == 3; }), tag + " cubic");
  }
  o.note << kSurfaces.size() << " signatures";
}

void relator_identity(Outcome& o) {
  Rng rng(105);
  double worst = 0.0;
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    for (int i = 0; i < 10; ++i) {
      const SurfaceGroupHolonomy h = surface_group_holonomy(Representation(t, testing::random_decoration(rng, t)));
      worst = std::max(worst, h.relator_residual);
    }
  }
  o.require(worst < 1e-8, "relator residual");
  const Triangulation s = generate_surface(0, 3);
  const SurfaceGroupHolonomy h = surface_group_holonomy(Representation(s, testing::random_decoration(rng, s)));
  o.require(h.c.size() == 3 && is_projective_identity(compose(h.c[0], compose(h.c[1], h.c[2])), 1e-9), "ABC");
  o.note << "max relator residual " << worst << "; ABC = 1";
}

void peripheral_classification(Outcome& o) {
  Rng rng(106);
  int lox = 0, para = 0, skipped = 0;
  double worst_trace = 0.0;
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    for (int i = 0; i < 20; ++i) {
      std::vector<double> m(t.edges.size());
      for (auto& x : m) x = rng.log_uniform(0.3, 3.0);
      const double theta = rng.uniform(-3.0, 3.0);
      // Unbalanced side: every puncture with a product away from 1.
      const Representation r(t, make_regular(m, theta));
      for (int v = 0; v < n; ++v) {
        const double prod = crossing_modulus_product(t, r.decoration, v);
        if (std::abs(std::log(prod)) < 0.1) {
          ++skipped;
          continue;
        }
        o.require(classify(peripheral_holonomy(r, v)) == IsometryClass::Loxodromic, "unbalanced -> Loxodromic");
        ++lox;
      }
      // Balanced side: rescale one crossed edge of a chosen puncture.
      const int v = rng.integer(0, n - 1);
      const auto pc = peripheral_cycle(t, v);
      double prod = 1.0;
      for (int e : pc.crossed_edges) prod *= m[e];
      const int e0 = pc.crossed_edges.front();
      const auto mult = std::count(pc.crossed_edges.begin(), pc.crossed_edges.end(), e0);
      m[e0] *= std::pow(prod, -1.0 / static_cast<double>(mult));
      const Representation b(t, make_regular(m, theta));
      o.require(is_balanced(t, b.decoration, v), "balance helper");
      const Isometry h = peripheral_holonomy(b, v);
      o.require(classify(h) == IsometryClass::Parabolic, "balanced -> Parabolic");
      worst_trace = std::max(worst_trace, std::abs(canonical_trace(h.matrix) - 3.0));
      ++para;
    }
  }
  o.require(worst_trace < 1e-9, "unipotent trace");
  o.note << lox << " loxodromic, " << para << " parabolic (max |tr-3| " << worst_trace << "), " << skipped
         << " near-balanced skipped";
}

void bipartite_holomorphic(Outcome& o) {
  Rng rng(107);
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    const Representation rep(t, testing::random_decoration(rng, t));
    o.require(rep.bipartite && holonomy_flag_check(rep), "bipartite surface has antiholomorphic generator");
    const SurfaceGroupHolonomy h = surface_group_holonomy(rep);
    for (const auto& x : h.pairing) o.require(!x.antiholomorphic, "pairing image");
    for (const auto& x : h.c) o.require(!x.antiholomorphic, "peripheral image");
  }
  const Triangulation bad = synthetic_nonbipartite();
  const Representation rep(bad, testing::random_decoration(rng, bad));
  o.require(!rep.bipartite, "synthetic surface is bipartite");
  bool odd = false;
  for (int k = 0; k < 3 && !odd; ++k) {
    const int w = dual_id(0, k);
    if (dual_face(bad.across(w)) != 0) continue;
    SimplicialPath p{w, {step_cross(bad, w)}};
    for (int cur = bad.across(w); cur != w; cur = dual_id(0, (dual_side(cur) + 1) % 3))
      p.steps.push_back(step_E(bad, cur));
    odd = path_closed(rep.graph, p) && type1_count(rep.graph, p) % 2 == 1 && path_isometry(rep, p).antiholomorphic;
  }
  o.require(odd, "odd loop");
  o.note << "all generator images holomorphic; synthetic odd loop found";
}

void development_audits(Outcome& o) {
  Rng rng(108);
  double cartan_max = 0.0, equiv_max = 0.0, toledo_max = 0.0;
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    const Representation rep(t, testing::random_decoration(rng, t));
    const BentRealization rl = develop(rep, 4);
    cartan_max = std::max(cartan_max, max_abs_cartan(rl));
    equiv_max = std::max(equiv_max, equivariance_audit(rl, rep, audit_loops(rep)).max_residual);

    std::vector<double> m(t.edges.size());
    for (auto& x : m) x = rng.log_uniform(0.4, 2.5);
    const Representation real(t, make_regular(m, 0.0));
    o.require(real_fuchsian_audit(develop(real, 4)), "theta = 0 not real");

    // All-ones moduli balance every puncture.
    const Representation bal(t, make_regular(std::vector<double>(t.edges.size(), 1.0), rng.uniform(-2.5, 2.5)));
    const ToledoResult tr = toledo(develop(bal, 4), bal);
    o.require(tr.type_preserving, "balanced not type preserving");
    toledo_max = std::max(toledo_max, std::abs(tr.value));
  }
  const Triangulation torus = generate_surface(1, 1);
  const Representation tb(torus, make_regular({2.0, 1.0, 0.5}, 0.8));
  toledo_max = std::max(toledo_max, std::abs(toledo(develop(tb, 4), tb).value));
  o.require(cartan_max < 1e-9, "Cartan");
  o.require(equiv_max < 1e-8, "equivariance");
  o.require(toledo_max < 1e-8, "Toledo");
  o.note << "max |Cartan| " << cartan_max << ", equivariance " << equiv_max << ", |Toledo| " << toledo_max;
}

void certificate(Outcome& o) {
  const double pi = std::numbers::pi;
  const std::vector<double> radii = log_grid(0.25, 4.0, 5);
  double gap = 0.0, min_margin = 1e300;
  int pairs = 0;
  for (int k = 0; k < 5; ++k) {
    const double theta = -pi / 2 + k * pi / 4;
    const CertificateReport r = certify(theta, radii, radii);
    gap = std::max(gap, r.max_closed_form_gap);
    min_margin = std::min(min_margin, r.min_margin);
    o.require(r.all_above, "Re trace < 3");
    for (double r2 : radii)
      for (double r3 : radii) {
        o.require(position_of_real_symmetries(leaf_symmetry_2(theta, r2), leaf_symmetry_3(theta, r3)) ==
                      Position::Disjoint,
                  "position");
        ++pairs;
      }
  }
  o.require(gap < 1e-10, "closed form");
  o.note << "closed-form gap " << gap << ", min margin " << min_margin << ", " << pairs << " disjoint pairs";
}

void conjugate_symmetry(Outcome& o) {
  Rng rng(110);
  double worst = 0.0;
  for (auto [g, n] : kSurfaces) {
    const Triangulation t = generate_surface(g, n);
    const Decoration d = testing::random_decoration(rng, t);
    const SurfaceGroupHolonomy h = surface_group_holonomy(Representation(t, d));
    const SurfaceGroupHolonomy hc = surface_group_holonomy(Representation(t, conjugate(d)));
    auto cmp = [&](const std::vector<Isometry>& a, const std::vector<Isometry>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        const cplx x = canonical_trace(a[i].matrix), y = canonical_trace(b[i].matrix);
        worst = std::max(worst, std::abs(y - std::conj(x)) / std::max(1.0, std::abs(x)));
      }
    };
    cmp(h.pairing, hc.pairing);
    cmp(h.c, hc.c);
  }
  o.require(worst < 1e-9, "trace conjugation");
  o.note << "max relative gap " << worst;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"elementary algebra", elementary_algebra},
      {"classification oracle", classification_oracle},
      {"Z-invariant round trip", z_round_trip},
      {"combinatorial counts", combinatorial_counts},
      {"relator identity", relator_identity},
      {"peripheral classification", peripheral_classification},
      {"bipartite iff holomorphic", bipartite_holomorphic},
      {"development audits", development_audits},
      {"certificate", certificate},
      {"conjugate-decoration symmetry", conjugate_symmetry},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d %s: %s (%.0f ms)\n", o.ok ? "PASS" : "FAIL", index, name, o.note.str().c_str(), ms);
    if (!o.ok) ++failed;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed;
}
