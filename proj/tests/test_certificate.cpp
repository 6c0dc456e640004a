#include "doctest.h"
#include "support.hpp"

using namespace cbend;

namespace {

const double pi = std::numbers::pi;
const std::vector<double> kThetas = {-pi / 2, -pi / 4, 0.0, pi / 4, pi / 2};
const std::vector<double> kRadii = {0.25, 0.5, 1.0, 2.0, 4.0};

// Entry (1,0) is -sqrt(2) r^2; with + the matrix is not an involution.
GroupMatrix m3_reference(double theta, double r) {
  const double b = r * r, s2 = std::sqrt(2.0);
  const cplx e = std::polar(1.0, theta);
  GroupMatrix m;
  m << -b, s2 * (e + b), (1.0 + 2.0 * e * b + b * b) / b,
       -s2 * b, e + 2.0 * b, s2 * (e + b),
       b, -s2 * b, -b;
  return m;
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("leaf symmetries at r = 1 and involution property") {
  const GroupMatrix m = leaf_symmetry_2(0.7, 1.0).matrix;
  GroupMatrix expect = GroupMatrix::Zero();
  expect(0, 2) = 1.0;
  expect(1, 1) = std::polar(1.0, 0.7);
  expect(2, 0) = 1.0;
  CHECK((m - expect).norm() < 1e-15);
  for (double th : kThetas)
    for (double r : kRadii) {
      const Isometry a = leaf_symmetry_2(th, r), b = leaf_symmetry_3(th, r);
      CHECK(a.antiholomorphic);
      CHECK(b.antiholomorphic);
      CHECK((a.matrix * a.matrix.conjugate() - GroupMatrix::Identity()).norm() < 1e-12);
      CHECK((b.matrix * b.matrix.conjugate() - GroupMatrix::Identity()).norm() < 1e-10);
      CHECK(unitarity_residual(b.matrix) < 1e-10);
    }
  CHECK_THROWS_AS(leaf_symmetry_2(0.0, 0.0), Error);
  CHECK_THROWS_AS(leaf_symmetry_3(0.0, -1.0), Error);
}

TEST_CASE("leaf_symmetry_3 matches the explicit matrix") {
  const GroupMatrix m = leaf_symmetry_3(pi / 4, 2.0).matrix;
  const GroupMatrix ref = m3_reference(pi / 4, 2.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(m(i, j) - ref(i, j)) < 1e-12);
  // E-conjugation covariance at the matrix level.
  const GroupMatrix direct = elementary_E().matrix * leaf_symmetry_2(pi / 4, 2.0).matrix *
                             elementary_E_inverse().matrix.conjugate();
  CHECK((direct - m).norm() < 1e-12);
}

TEST_CASE("certificate trace examples") {
  CHECK(std::abs(certificate_trace(0.0, 1.0, 1.0) - 8.0) < 1e-12);
  CHECK(std::abs(certificate_trace(pi / 2, 1.0, 1.0) - 4.0) < 1e-12);
  CHECK(std::abs(certificate_trace_closed_form(pi / 2, 1.0, 1.0) - 4.0) < 1e-12);
  CHECK_THROWS_AS(certificate_trace_closed_form(0.0, 0.0, 1.0), Error);
}

TEST_CASE("closed form agrees with the matrix trace") {
  for (double th : kThetas)
    for (double r2 : kRadii)
      for (double r3 : kRadii) {
        const cplx a = certificate_trace(th, r2, r3), b = certificate_trace_closed_form(th, r2, r3);
        CHECK(std::abs(a - b) < 1e-10);
        CHECK(std::abs(certificate_trace(-th, r2, r3) - std::conj(a)) < 1e-10);
        if (std::cos(th) >= 0.0)
          CHECK(a.real() - (1.0 + r2 * r2 * r3 * r3 + 1.0 / (r2 * r2 * r3 * r3)) >= -1e-12);
      }
}

TEST_CASE("certify passes on the in-range grid") {
  for (double th : kThetas) {
    const CertificateReport r = certify(th, kRadii, kRadii);
    CHECK(r.points.size() == 25);
    CHECK(r.angle_in_range);
    CHECK(r.all_above);
    CHECK(r.loxodromic == 25);
    CHECK(r.min_re >= 3.0);
    CHECK(r.pass());
    CHECK(r.max_closed_form_gap < 1e-10);
  }
  // Tightest point: Re = 3 + 1/256 with f just above the band.
  const CertificateReport edge = certify(pi / 2, {4.0}, {0.25});
  CHECK(edge.min_re == doctest::Approx(3.0 + 1.0 / 256));
  CHECK(edge.points[0].cls == IsometryClass::Loxodromic);
}

TEST_CASE("certify at theta = 0 on the default grid") {
  const CertificateReport r = certify(0.0, log_grid(0.25, 4.0, 5), log_grid(0.25, 4.0, 5));
  CHECK(r.pass());
  const auto it = std::find_if(r.points.begin(), r.points.end(),
                               [](const CertificatePoint& p) { return p.r2 == 1.0 && p.r3 == 1.0; });
  REQUIRE(it != r.points.end());
  CHECK(it->margin == doctest::Approx(5.0));
  CHECK(r.min_margin < 5.0);
  CHECK(r.min_margin > 0.0);
}

TEST_CASE("out-of-range angles only report") {
  const CertificateReport r = certify(0.6 * pi, kRadii, kRadii);
  CHECK_FALSE(r.angle_in_range);
  CHECK(r.pass());
  CHECK(r.points.size() == 25);
}

TEST_CASE("log grid") {
  const auto g = log_grid(0.25, 4.0, 5);
  REQUIRE(g.size() == 5);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == doctest::Approx(kRadii[i]));
  CHECK(log_grid(2.0, 3.0, 1) == std::vector<double>{2.0});
  CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), Error);
  CHECK_THROWS_AS(log_grid(1.0, 2.0, 0), Error);
}

TEST_CASE("position of real symmetries") {
  for (double th : kThetas)
    for (double r2 : kRadii)
      for (double r3 : kRadii)
        CHECK(position_of_real_symmetries(leaf_symmetry_2(th, r2), leaf_symmetry_3(th, r3)) ==
              Position::Disjoint);
  const Isometry s = elementary_sigma(cplx(1.0, 2.0));
  CHECK(position_of_real_symmetries(s, s) == Position::Intersecting);

  // The standard real plane and its Heisenberg translate by [i, 0] share only infinity.
  const Isometry conj_map{GroupMatrix::Identity(), true};
  const Isometry h = translation_T(cplx(0.0, 0.5), 0.0);
  const Isometry moved = compose(h, compose(conj_map, inverse(h)));
  CHECK(position_of_real_symmetries(conj_map, moved) == Position::Asymptotic);
  const Isometry lifted = compose(translation_T(0.0, 1.0), compose(conj_map, translation_T(0.0, -1.0)));
  CHECK(position_of_real_symmetries(conj_map, lifted) == Position::Asymptotic);

  CHECK_THROWS_AS(position_of_real_symmetries(elementary_E(), s), Error);
  CHECK_THROWS_AS(position_of_real_symmetries(s, compose(s, elementary_sigma(2.0))), Error);
}

}  // TEST_SUITE
