#include "doctest.h"
#include "support.hpp"

using namespace cbend;
using cbend::testing::Rng;

namespace {
const double s2 = std::sqrt(2.0);

HVector random_vector(Rng& rng) {
  return HVector(cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)), cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                 cplx(rng.uniform(-2, 2), rng.uniform(-2, 2)));
}
}  // namespace

TEST_SUITE("hermitian") {

TEST_CASE("herm_product on basis and boundary lifts") {
  CHECK(std::abs(herm_product(HVector(1, 0, 0), HVector(1, 0, 0))) == 0.0);
  CHECK(herm_product(HVector(0, 1, 0), HVector(0, 1, 0)) == cplx(1.0));
  const HVector m1(-1.0, -s2, 1.0);
  CHECK(std::abs(herm_product(m1, m1)) < 1e-15);
}

TEST_CASE("herm_product is sesquilinear") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const HVector x = random_vector(rng), y = random_vector(rng);
    CHECK(std::abs(herm_product(y, x) - std::conj(herm_product(x, y))) < 1e-12);
    const cplx a = rng.nonzero_complex();
    CHECK(std::abs(herm_product(a * x, y) - a * herm_product(x, y)) < 1e-11);
    CHECK(std::abs(herm_product(x, a * y) - std::conj(a) * herm_product(x, y)) < 1e-11);
  }
}

TEST_CASE("form has signature (2,1)") {
  Eigen::SelfAdjointEigenSolver<GroupMatrix> es(form_J());
  const auto ev = es.eigenvalues();
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(1) == doctest::Approx(1.0));
  CHECK(ev(2) == doctest::Approx(1.0));
}

TEST_CASE("lift values") {
  CHECK((lift(BoundaryPoint::heisenberg(0.0, 0.0)) - HVector(0, 0, 1)).norm() == 0.0);
  CHECK((lift(BoundaryPoint::at_infinity()) - HVector(1, 0, 0)).norm() == 0.0);
  CHECK((lift(BoundaryPoint::heisenberg(-1.0, 0.0)) - HVector(-1, -s2, 1)).norm() < 1e-15);
  CHECK((lift(HoroPoint{0.0, 0.0, 4.0}) - HVector(-4, 0, 1)).norm() == 0.0);
}

TEST_CASE("boundary lifts are null, interior lifts negative") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const HVector v = lift(rng.boundary_point());
    CHECK(std::abs(herm_product(v, v)) <= 1e-12 * v.squaredNorm());
    const HoroPoint h = rng.horo_point();
    CHECK(herm_product(lift(h), lift(h)).real() == doctest::Approx(-2.0 * h.u));
  }
}

TEST_CASE("project_point inverts lift up to scale") {
  CHECK(std::get<BoundaryPoint>(project_point(HVector(0, 0, 2))).z == cplx(0.0));
  CHECK(std::get<BoundaryPoint>(project_point(HVector(1, 0, 0))).infinity);
  const auto p = std::get<BoundaryPoint>(project_point(2.0 * HVector(-1, -s2, 1)));
  CHECK(std::abs(p.z + 1.0) < 1e-15);
  CHECK(std::abs(p.t) < 1e-15);
  CHECK_THROWS_AS(project_point(HVector(0, 1, 0)), Error);

  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const BoundaryPoint b = rng.boundary_point();
    const cplx s = rng.nonzero_complex();
    const auto q = std::get<BoundaryPoint>(project_point(s * lift(b)));
    CHECK(std::abs(q.z - b.z) < 1e-12);
    CHECK(std::abs(q.t - b.t) < 1e-12);
    const HoroPoint h = rng.horo_point();
    const auto k = std::get<HoroPoint>(project_point(s * lift(h)));
    CHECK(std::abs(k.z - h.z) < 1e-12);
    CHECK(std::abs(k.t - h.t) < 1e-12);
    CHECK(std::abs(k.u - h.u) < 1e-11);
  }
}

TEST_CASE("distance") {
  const HoroPoint m{0.0, 0.0, 1.0}, n{0.0, 0.0, 4.0};
  CHECK(distance(m, m) == doctest::Approx(0.0));
  CHECK(distance(m, n) == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(distance(m, n) == doctest::Approx(2.0 * std::acosh(1.25)).epsilon(1e-12));

  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const HoroPoint a = rng.horo_point(), b = rng.horo_point();
    CHECK(distance(a, b) >= 0.0);
    CHECK(std::abs(distance(a, b) - distance(b, a)) < 1e-12);
    const double u1 = rng.log_uniform(0.01, 100), u2 = rng.log_uniform(0.01, 100);
    CHECK(std::abs(distance(HoroPoint{0.0, 0.0, u1}, HoroPoint{0.0, 0.0, u2}) - std::abs(std::log(u2 / u1))) < 1e-9);
  }
}

TEST_CASE("distance is invariant under isometries") {
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    const Isometry g = cbend::testing::random_holomorphic(rng, 4);
    const HoroPoint a = rng.horo_point(), b = rng.horo_point();
    const auto ga = std::get<HoroPoint>(apply_point(g, Point(a)));
    const auto gb = std::get<HoroPoint>(apply_point(g, Point(b)));
    CHECK(distance(ga, gb) == doctest::Approx(distance(a, b)).epsilon(1e-7));
  }
}

TEST_CASE("projection onto the standard real plane") {
  const HVector r = project_to_standard_real_plane(HVector(-1, 0, 1));
  CHECK(projective_distance(r, HVector(-1, 0, 1)) < 1e-15);

  const HVector v(-1.0, cplx(0.0, s2), 1.0);
  CHECK(std::abs(herm_product(v, v.conjugate()) + 4.0) < 1e-14);
  const HVector w = project_to_standard_real_plane(v);
  CHECK((w - HVector(-2, 0, 2)).norm() < 1e-14);

  Rng rng(16);
  for (int i = 0; i < 100; ++i) {
    const HVector x = lift(rng.horo_point()) * rng.nonzero_complex();
    const HVector y = project_to_standard_real_plane(x);
    const HVector yy = project_to_standard_real_plane(y);
    CHECK(projective_distance(y, yy) < 1e-9);
    // Projective coordinates are real.
    const HVector n = y / y(2);
    CHECK(n.imag().norm() < 1e-9 * n.norm());
  }
  // Boundary points of the standard real plane have <v, conj v> = 0.
  CHECK_THROWS_AS(project_to_standard_real_plane(HVector(-1, s2, 1)), Error);
}

TEST_CASE("projective_distance") {
  const HVector a(1, 2, 3);
  CHECK(projective_distance(a, cplx(0, 3) * a) < 1e-15);
  CHECK(projective_distance(HVector(1, 0, 0), HVector(0, 0, 1)) == doctest::Approx(std::sqrt(2.0)));
}

}
