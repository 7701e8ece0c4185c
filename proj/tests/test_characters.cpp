#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqf/characters.hpp"
#include "hqf/random_gen.hpp"

using namespace hqf;

namespace {

const Polynomial3 x1 = Polynomial3::variable(0);
const Polynomial3 x2 = Polynomial3::variable(1);
const Axis i_axis = Axis(make_vec3(1, 0, 0));
const Axis k_axis = Axis(make_vec3(0, 0, 1));

Vec3 rvec(long a1, long b1, long a2, long b2, long a3, long b3) {
  Vec3 v;
  Rational r1(a1, b1), r2(a2, b2), r3(a3, b3);
  r1.canonicalize();
  r2.canonicalize();
  r3.canonicalize();
  v << r1, r2, r3;
  return v;
}

Frame tilted_frame() {
  return Frame(rvec(3, 5, 4, 5, 0, 1), rvec(-4, 5, 3, 5, 0, 1), rvec(0, 1, 0, 1, 1, 1));
}

}  // namespace

TEST_CASE("frame validation") {
  CHECK_NOTHROW(Frame::standard());
  CHECK_NOTHROW(tilted_frame());
  // left-handed
  CHECK_THROWS_AS(Frame(make_vec3(0, 1, 0), make_vec3(1, 0, 0), make_vec3(0, 0, 1)),
                  std::invalid_argument);
  // not orthonormal
  CHECK_THROWS_AS(Frame(make_vec3(2, 0, 0), make_vec3(0, 1, 0), make_vec3(0, 0, 1)),
                  std::invalid_argument);
}

TEST_CASE("coordinate fields") {
  const auto pi = coordinate_fields(Frame::standard());
  CHECK((pi[0] == QuaternionPolyField{x1, {{}, {}, x2}}));
  for (const auto& p : pi) CHECK(is_harmonic_field(p));

  // pi_1 is axial for w3, not for w1
  CHECK(is_axial(pi[0], k_axis));
  CHECK_FALSE(is_axial(pi[0], i_axis));

  const auto qi = coordinate_fields(tilted_frame());
  for (const auto& p : qi) CHECK(is_harmonic_field(p));
}

TEST_CASE("the coordinate-field identity") {
  CHECK(verify_identity_27(Frame::standard()));
  CHECK(verify_identity_27(tilted_frame()));
  Rng rng(401);
  for (int t = 0; t < 10; ++t) CHECK(verify_identity_27(random_frame(rng)));
}

TEST_CASE("linear harmonic fields") {
  const auto pi = coordinate_fields(Frame::standard());
  const LinearHarmonicField lin = linear_from_field(pi[0]);
  CHECK(lin.to_field() == pi[0]);

  // trace-free / curl-consistency violations
  Mat3 bad = Mat3::Zero();
  bad(0, 0) = 1;
  CHECK_THROWS_AS(LinearHarmonicField(Vec3::Zero(), bad), std::invalid_argument);
  CHECK_THROWS_AS(linear_from_field(QuaternionPolyField{x1 * x2, {}}), std::invalid_argument);
}

TEST_CASE("expansion over pi_2, pi_3") {
  const Frame f = Frame::standard();
  const auto pi = coordinate_fields(f);

  SUBCASE("pi_2 itself") {
    const auto [g, h] = expand_linear(linear_from_field(pi[1]), f);
    CHECK(g == Quaternion::one());
    CHECK(h == Quaternion::zero());
  }
  SUBCASE("pi_1 = o3 pi_2 - o2 pi_3") {
    const auto [g, h] = expand_linear(linear_from_field(pi[0]), f);
    CHECK((g == Quaternion{Rational(0), f.w3}));
    CHECK((h == -Quaternion{Rational(0), f.w2}));
  }
  SUBCASE("random combinations round-trip") {
    Rng rng(402);
    for (int t = 0; t < 10; ++t) {
      const Frame fr = random_frame(rng);
      const auto cf = coordinate_fields(fr);
      const Quaternion g{random_rational(rng), rvec(rand_int(rng, -3, 3), 1,
                                                    rand_int(rng, -3, 3), 1,
                                                    rand_int(rng, -3, 3), 1)};
      const Quaternion h{random_rational(rng), rvec(rand_int(rng, -3, 3), 1,
                                                    rand_int(rng, -3, 3), 1,
                                                    rand_int(rng, -3, 3), 1)};
      const QuaternionPolyField p = mul(g, cf[1]) + mul(h, cf[2]);
      const auto [g2, h2] = expand_linear(linear_from_field(p), fr);
      CHECK(g2 == g);
      CHECK(h2 == h);
    }
  }
}

TEST_CASE("dirac functional gates on the closed ball") {
  CHECK_NOTHROW(DiracFunctional(rvec(1, 2, -1, 3, 1, 4)));
  CHECK_NOTHROW(DiracFunctional(rvec(3, 5, 4, 5, 0, 1)));  // boundary point
  CHECK_THROWS_AS(DiracFunctional(make_vec3(1, 1, 1)), std::invalid_argument);

  const DiracFunctional mu(rvec(1, 2, 0, 1, 0, 1));
  const auto pi = coordinate_fields(Frame::standard());
  CHECK((mu(pi[0]) == Quaternion{Rational(1, 2), Vec3::Zero()}));
}

TEST_CASE("point reconstruction from functional values") {
  const Frame f = Frame::standard();
  const Vec3 x0 = rvec(1, 2, -1, 3, 1, 4);
  const DiracFunctional mu(x0);
  const FunctionalValues vals = FunctionalValues::from_dirac(mu, f);
  CHECK(reconstruct_point(vals, f) == x0);

  // also through a tilted frame
  const Frame g = tilted_frame();
  CHECK(reconstruct_point(FunctionalValues::from_dirac(mu, g), g) == x0);

  Rng rng(403);
  for (int t = 0; t < 20; ++t) {
    const Frame fr = random_frame(rng);
    const Vec3 y = random_point_in_ball(rng);
    const DiracFunctional nu(y);
    CHECK(reconstruct_point(FunctionalValues::from_dirac(nu, fr), fr) == y);
  }
}

TEST_CASE("perturbed values are rejected") {
  const Frame f = Frame::standard();
  const DiracFunctional mu(rvec(1, 2, -1, 3, 1, 4));
  const auto pi = coordinate_fields(f);
  const Quaternion v1 = mu(pi[0]), v2 = mu(pi[1]), v3 = mu(pi[2]);

  // break the consistency equation a12 = b31
  const Quaternion bad1 = v1 + Quaternion{Rational(1, 7), Vec3::Zero()};
  CHECK_THROWS_AS(reconstruct_point(FunctionalValues(bad1, v2, v3, f), f),
                  std::invalid_argument);

  // vector part off-axis fails at construction
  const Quaternion off = v1 + Quaternion{Rational(0), make_vec3(1, 0, 0)};
  CHECK_THROWS_AS(FunctionalValues(off, v2, v3, f), std::invalid_argument);
}

TEST_CASE("multiplicativity on coaxial pairs") {
  Rng rng(404);
  for (int t = 0; t < 25; ++t) {
    const Axis w = random_axis(rng);
    const int n = static_cast<int>(rand_int(rng, 1, 3));
    const auto& b = basis_axial_scalar(n, w).elements;
    QuaternionPolyField p, q;
    for (const auto& e : b) {
      p = p + random_rational(rng, 5, 3) * axial_lift(e, w);
      q = q + random_rational(rng, 5, 3) * axial_lift(e, w);
    }
    const DiracFunctional mu(random_point_in_ball(rng));
    CHECK(multiplicativity_check(mu, p, q, w));
  }
}

TEST_CASE("axial algebra generators") {
  const auto [unit, gen] = generators(k_axis, i_axis);
  CHECK(unit == QuaternionPolyField::constant(Quaternion::one()));
  CHECK((gen == QuaternionPolyField{x1, {{}, {}, x2}}));
  CHECK(coaxial_mul(unit, gen, k_axis) == gen);

  CHECK_THROWS_AS(generators(k_axis, Axis(make_vec3(1, 0, 1))), std::invalid_argument);

  // harmonic and axial for scaled, skew axes too
  const Axis w(make_vec3(1, 2, 2));
  const Axis eta(make_vec3(2, -1, 0));
  const auto [u2, g2] = generators(w, eta);
  CHECK(is_harmonic_field(g2));
  CHECK(is_axial(g2, w));
}

TEST_CASE("left module action of constant quaternions") {
  const QuaternionPolyField pi1{x1, {{}, {}, x2}};
  const QuaternionPolyField ipi1 = mul(Quaternion::unit_i(), pi1);
  CHECK((ipi1 == QuaternionPolyField{Polynomial3{}, {x1, -x2, {}}}));
  CHECK(h_module_check(Quaternion::unit_i(), pi1));

  Rng rng(405);
  for (int n = 1; n <= 4; ++n)
    for (const auto& e : basis_quat_harmonic(n).elements) {
      CHECK(h_module_check(Quaternion::unit_i(), e));
      CHECK(h_module_check(Quaternion::unit_j(), e));
      CHECK(h_module_check(Quaternion::unit_k(), e));
      Vec3 v;
      v << random_rational(rng), random_rational(rng), random_rational(rng);
      CHECK(h_module_check(Quaternion{random_rational(rng), v}, e));
    }
}

TEST_CASE("the product of coordinate fields is not harmonic") {
  const NonClosureWitness w = non_closure_witness();
  const Polynomial3 x3 = Polynomial3::variable(2);
  CHECK(w.div_defect == Rational(2) * x3);
  CHECK(w.gradient_defect.is_zero());
  CHECK_FALSE(is_harmonic_field(w.pq));
  CHECK(w.pq.alpha == x1 * x2);
}

TEST_CASE("growth outside the ball") {
  Vec3 x0 = make_vec3(2, 0, 0);
  const auto rows = growth_demonstration(x0, 6, 128);
  REQUIRE(rows.size() == 6);
  // outside value outgrows the in-ball sup at every step
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].value_module / rows[i].ball_sup >
          rows[i - 1].value_module / rows[i - 1].ball_sup);
  }
  CHECK(rows.back().value_module / rows.back().ball_sup > 8.0);
}
