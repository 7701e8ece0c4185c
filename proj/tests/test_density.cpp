#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hqf/density.hpp"
#include "hqf/random_gen.hpp"

using namespace hqf;

namespace {

const Polynomial3 x1 = Polynomial3::variable(0);
const Polynomial3 x2 = Polynomial3::variable(1);
const Polynomial3 x3 = Polynomial3::variable(2);
const Polynomial3 one = Polynomial3::constant(Rational(1));

}  // namespace

TEST_CASE("planar Poisson particular solution") {
  CHECK(poisson_particular_2d(Polynomial3{}).is_zero());
  CHECK(detail::laplacian_2d(poisson_particular_2d(one)) == one);
  CHECK(poisson_particular_2d(x1) == x1 * x1 * x1 * Rational(1, 6));
  CHECK_THROWS_AS(poisson_particular_2d(x3), std::invalid_argument);

  Rng rng(301);
  for (int t = 0; t < 15; ++t) {
    Polynomial3 f;
    for (int d = 0; d <= 4; ++d) {
      const Polynomial3 h = random_harmonic_scalar(rng, d);
      // keep only the x3-free part
      for (const auto& [m, c] : h.terms())
        if (m.e[2] == 0) f.add_term(m, c);
    }
    CHECK(detail::laplacian_2d(poisson_particular_2d(f)) == f);
  }
}

TEST_CASE("harmonic circle trace") {
  SUBCASE("harmonic input is returned unchanged") {
    CHECK(dirichlet_harmonic_2d(x1 * x1 - x2 * x2) == x1 * x1 - x2 * x2);
    CHECK(dirichlet_harmonic_2d(x1) == x1);
    CHECK(dirichlet_harmonic_2d(one) == one);
  }
  SUBCASE("rho maps to 1 on the circle") {
    CHECK(dirichlet_harmonic_2d(x1 * x1 + x2 * x2) == one);
  }
  SUBCASE("x1^2 maps to (1 + x1^2 - x2^2)/2") {
    CHECK(dirichlet_harmonic_2d(x1 * x1) ==
          Rational(1, 2) * (one + x1 * x1 - x2 * x2));
  }
  SUBCASE("output is planar harmonic, difference vanishes on the circle") {
    Rng rng(302);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int t = 0; t < 10; ++t) {
      Polynomial3 q;
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b)
          q.add_term(Monomial{{static_cast<unsigned>(a), static_cast<unsigned>(b), 0}},
                     Rational(coef(rng)));
      const Polynomial3 r = dirichlet_harmonic_2d(q);
      CHECK(detail::laplacian_2d(r).is_zero());
      // rational circle points (3/5, 4/5), (1, 0), (-5/13, 12/13)
      const auto at = [&](long pn, long pd, long qn, long qd) {
        Vec3 x = Vec3::Zero();
        x(0) = Rational(pn, pd);
        x(1) = Rational(qn, qd);
        return (q - r).evaluate(x);
      };
      CHECK(at(3, 5, 4, 5) == 0);
      CHECK(at(1, 1, 0, 1) == 0);
      CHECK(at(-5, 13, 12, 13) == 0);
    }
  }
}

TEST_CASE("divergence correction") {
  SUBCASE("v = (x1, 0, 0)") {
    const CorrectionReport rep = divergence_correction({x1, {}, {}});
    CHECK(rep.eta == x3);
    CHECK((rep.u_tilde == VectorPoly{x1, {}, -x3}));
    CHECK(rep.all_certified());
  }
  SUBCASE("divergence-free input passes through") {
    const VectorPoly v{x2, -x1, {}};
    const CorrectionReport rep = divergence_correction(v);
    CHECK(rep.eta.is_zero());
    CHECK(rep.u_tilde == v);
    CHECK(rep.all_certified());
  }
  SUBCASE("non-harmonic input is rejected") {
    CHECK_THROWS_AS(divergence_correction({x1 * x1, {}, {}}), std::invalid_argument);
  }
  SUBCASE("linearity of the correction") {
    Rng rng(303);
    const VectorPoly a = random_harmonic_vector(rng, 4);
    const VectorPoly b = random_harmonic_vector(rng, 4);
    const Polynomial3 ea = divergence_correction(a).eta;
    const Polynomial3 eb = divergence_correction(b).eta;
    CHECK(divergence_correction(a + b).eta == ea + eb);
    CHECK(divergence_correction(Rational(2) * a).eta == Rational(2) * ea);
    CHECK(divergence_correction(Rational(1, 2) * a).eta == Rational(1, 2) * ea);
  }
  SUBCASE("random inputs certify") {
    Rng rng(304);
    for (int t = 0; t < 10; ++t) {
      const CorrectionReport rep = divergence_correction(random_harmonic_vector(rng, 5));
      CHECK(rep.all_certified());
    }
  }
}

TEST_CASE("completion to a harmonic quaternion field") {
  const QuaternionPolyField p = complete_to_quaternion({{}, {}, x2}, Rational(0));
  CHECK((p == QuaternionPolyField{x1, {{}, {}, x2}}));

  const QuaternionPolyField shifted = complete_to_quaternion({{}, {}, x2}, Rational(7));
  CHECK(shifted.alpha == x1 + Polynomial3::constant(Rational(7)));

  CHECK_THROWS_AS(complete_to_quaternion({x1, {}, {}}, Rational(0)), std::invalid_argument);

  Rng rng(305);
  for (int t = 0; t < 8; ++t) {
    const CorrectionReport rep = divergence_correction(random_harmonic_vector(rng, 4));
    const QuaternionPolyField q = complete_to_quaternion(rep.u_tilde, random_rational(rng));
    CHECK(is_harmonic_field(q));
    CHECK(q.u == rep.u_tilde);
  }
}

TEST_CASE("approximation pipeline") {
  const QuaternionPolyField pi1{x1, {{}, {}, x2}};

  SUBCASE("zero perturbation reproduces the target exactly") {
    const ApproxResult res = approximate(pi1, VectorPoly{}, 128, 2);
    CHECK(res.p_tilde == pi1);
    CHECK(res.error.sup_module == 0);
    CHECK(res.error.eta.is_zero());
  }
  SUBCASE("error scales linearly with the perturbation") {
    const VectorPoly pert{Rational(1, 100) * x2, {}, {}};
    const ApproxResult a = approximate(pi1, pert, 256, 4);
    const ApproxResult b = approximate(pi1, Rational(2) * pert, 256, 4);
    CHECK(a.correction.all_certified());
    CHECK(b.error.eta == Rational(2) * a.error.eta);
    CHECK(b.error.sup_module == doctest::Approx(2 * a.error.sup_module).epsilon(1e-9));
  }
  SUBCASE("shrinking perturbations shrink the sampled error") {
    double last = 1e9;
    for (int k = 1; k <= 3; ++k) {
      const Rational eps(1, 10 * k * k);
      const VectorPoly pert{eps * (x1 * x2), eps * (x2 * x3), {}};
      const ApproxResult res = approximate(pi1, pert, 256, 4);
      CHECK(res.correction.all_certified());
      CHECK(is_harmonic_field(res.p_tilde));
      CHECK(res.error.sup_module < last);
      last = res.error.sup_module;
    }
  }
}
