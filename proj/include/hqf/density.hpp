#pragma once

#include "hqf/fields.hpp"
#include "hqf/linalg.hpp"
#include "hqf/spaces.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace hqf {

namespace detail {

/// Real and imaginary parts of (x1 + i x2)^n: the two-variable harmonic
/// homogeneous polynomials of degree n.
inline std::pair<Polynomial3, Polynomial3> circle_harmonics(int n) {
  Polynomial3 re = Polynomial3::constant(Rational(1));
  Polynomial3 im;
  const Polynomial3 x1 = Polynomial3::variable(0);
  const Polynomial3 x2 = Polynomial3::variable(1);
  for (int k = 0; k < n; ++k) {
    Polynomial3 nre = re * x1 - im * x2;
    im = re * x2 + im * x1;
    re = std::move(nre);
  }
  return {re, im};
}

/// Two-dimensional Laplacian (x3 plays no role for 2-variable inputs).
inline Polynomial3 laplacian_2d(const Polynomial3& p) {
  return p.derivative(0).derivative(0) + p.derivative(1).derivative(1);
}

}  // namespace detail

/// Exact particular solution q of the planar Poisson equation
/// Delta q(x1, x2) = f(x1, x2). Tie-break: each monomial x1^a x2^b maps to
/// x1^{a+2} x2^b / ((a+1)(a+2)); the x2-direction error this introduces has
/// strictly lower x2-degree, so a correction sweep terminates.
inline Polynomial3 poisson_particular_2d(const Polynomial3& f) {
  if (!f.depends_only_on_x1_x2())
    throw std::invalid_argument("poisson_particular_2d: input depends on x3");
  if (f.is_zero()) return {};
  Polynomial3 q0;
  for (const auto& [m, c] : f.terms()) {
    Monomial up = m;
    up.e[0] += 2;
    q0.add_term(up, c / Rational((m.e[0] + 1) * (m.e[0] + 2)));
  }
  const Polynomial3 residual = detail::laplacian_2d(q0) - f;
  Polynomial3 q = q0 - poisson_particular_2d(residual);
  if (detail::laplacian_2d(q) != f)
    throw std::logic_error("poisson_particular_2d: exact check failed");
  return q;
}

/// The unique two-variable harmonic polynomial agreeing with q on the unit
/// circle. Built from the planar harmonic decomposition
/// q = sum_m rho^m h_m (rho = x1^2 + x2^2), whose circle trace is sum h_m.
/// Certificate: q - r is exactly divisible by rho - 1.
inline Polynomial3 dirichlet_harmonic_2d(const Polynomial3& q) {
  if (!q.depends_only_on_x1_x2())
    throw std::invalid_argument("dirichlet_harmonic_2d: input depends on x3");
  const Polynomial3 rho =
      Polynomial3::variable(0) * Polynomial3::variable(0) +
      Polynomial3::variable(1) * Polynomial3::variable(1);

  Polynomial3 r;
  // Peel each homogeneous part as h_d + rho * (lower), recursing on the
  // cofactor; the circle trace collects the h's.
  std::vector<Polynomial3> stack;
  for (unsigned d : q.present_degrees()) stack.push_back(q.homogeneous_component(d));
  while (!stack.empty()) {
    Polynomial3 p = std::move(stack.back());
    stack.pop_back();
    if (p.is_zero()) continue;
    int d = -1;
    p.is_homogeneous(&d);
    if (d <= 1) {
      r += p;
      continue;
    }
    // Solve p = a*Re + b*Im + rho * g for the degree-(d-2) cofactor g.
    const auto [re, im] = detail::circle_harmonics(d);
    const auto lower = monomial_basis(d - 2);
    // Restrict to 2-variable monomials.
    std::vector<Monomial> cols2d;
    for (const Monomial& m : lower)
      if (m.e[2] == 0) cols2d.push_back(m);
    const int ncols = 2 + static_cast<int>(cols2d.size());
    const auto rows = monomial_basis(d);
    std::map<Monomial, int, GradedLexLess> row_index;
    int nrows = 0;
    for (const Monomial& m : rows)
      if (m.e[2] == 0) row_index.emplace(m, nrows++);
    MatX a = MatX::Zero(nrows, ncols);
    const auto fill = [&](int col, const Polynomial3& poly) {
      for (const auto& [m, c] : poly.terms()) a(row_index.at(m), col) = c;
    };
    fill(0, re);
    fill(1, im);
    for (size_t j = 0; j < cols2d.size(); ++j)
      fill(2 + static_cast<int>(j), rho * Polynomial3::term(cols2d[j], Rational(1)));
    VecX b = VecX::Zero(nrows);
    for (const auto& [m, c] : p.terms()) b(row_index.at(m)) = c;
    const auto x = solve_particular(a, b);
    if (!x) throw std::logic_error("dirichlet_harmonic_2d: harmonic split failed");
    r += (*x)(0) * re + (*x)(1) * im;
    Polynomial3 g;
    for (size_t j = 0; j < cols2d.size(); ++j) g.add_term(cols2d[j], (*x)(2 + static_cast<int>(j)));
    stack.push_back(std::move(g));
  }

  if (!detail::laplacian_2d(r).is_zero())
    throw std::logic_error("dirichlet_harmonic_2d: trace is not harmonic");
  // Divisibility of q - r by rho - 1 certifies equality on the circle.
  // Division runs univariately in x1; the remainder then has x1-degree
  // at most 1 and divisibility means it vanishes.
  Polynomial3 rem = q - r;
  const Polynomial3 rho_minus_1 = rho - Polynomial3::constant(Rational(1));
  while (true) {
    unsigned top = 0;
    for (const auto& [m, c] : rem.terms()) top = std::max(top, m.e[0]);
    if (top < 2) break;
    Polynomial3 quotient_slice;
    for (const auto& [m, c] : rem.terms())
      if (m.e[0] == top) {
        Monomial quot = m;
        quot.e[0] -= 2;
        quotient_slice.add_term(quot, c);
      }
    rem -= quotient_slice * rho_minus_1;
  }
  if (!rem.is_zero())
    throw std::logic_error("dirichlet_harmonic_2d: q - r not divisible by rho - 1");
  return r;
}

/// Certificate-carrying result of the divergence correction.
struct CorrectionReport {
  VectorPoly input_v;
  Polynomial3 q;    // planar Poisson particular solution
  Polynomial3 r;    // its harmonic circle trace
  Polynomial3 eta;  // q - r + integral of div v
  VectorPoly u_tilde;

  bool cert_div_u_tilde_zero = false;
  bool cert_u_tilde_harmonic = false;
  bool cert_eta_harmonic = false;
  bool cert_dx3_eta_matches = false;

  bool all_certified() const {
    return cert_div_u_tilde_zero && cert_u_tilde_harmonic && cert_eta_harmonic &&
           cert_dx3_eta_matches;
  }
};

/// Removes the divergence of a componentwise-harmonic polynomial field by
/// subtracting eta * k, with eta harmonic and d(eta)/dx3 = div v.
inline CorrectionReport divergence_correction(const VectorPoly& v) {
  if (!laplacian(v).is_zero())
    throw std::invalid_argument("divergence_correction: input is not componentwise harmonic");
  CorrectionReport rep;
  rep.input_v = v;
  const Polynomial3 d = div(v);
  const Polynomial3 f = -d.derivative(2).substitute_x3_zero();
  rep.q = poisson_particular_2d(f);
  rep.r = dirichlet_harmonic_2d(rep.q);
  rep.eta = rep.q - rep.r + d.integrate_x3();
  rep.u_tilde = v - VectorPoly{Polynomial3{}, Polynomial3{}, rep.eta};

  rep.cert_eta_harmonic = laplacian(rep.eta).is_zero();
  rep.cert_dx3_eta_matches = rep.eta.derivative(2) == d;
  rep.cert_div_u_tilde_zero = div(rep.u_tilde).is_zero();
  rep.cert_u_tilde_harmonic = laplacian(rep.u_tilde).is_zero();
  return rep;
}

/// Completes a divergence-free harmonic vector field to a harmonic
/// quaternion field: the potential of rot(u) (which is curl-free by
/// rot rot u = grad div u - lap u = 0), normalized to the given value at 0.
inline QuaternionPolyField complete_to_quaternion(const VectorPoly& u, const Rational& alpha0) {
  if (!div(u).is_zero() || !laplacian(u).is_zero())
    throw std::invalid_argument(
        "complete_to_quaternion: input must be divergence-free and harmonic");
  const VectorPoly curl = rot(u);
  Polynomial3 alpha = Polynomial3::constant(alpha0);
  std::vector<unsigned> degrees;
  for (int k = 0; k < 3; ++k)
    for (unsigned dg : curl[k].present_degrees()) degrees.push_back(dg);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (unsigned dg : degrees) {
    const VectorPoly comp{curl.c1.homogeneous_component(dg),
                          curl.c2.homogeneous_component(dg),
                          curl.c3.homogeneous_component(dg)};
    alpha += euler_potential(comp, static_cast<int>(dg));
  }
  QuaternionPolyField p{std::move(alpha), u};
  if (!is_harmonic_field(p))
    throw std::logic_error("complete_to_quaternion: output is not harmonic");
  return p;
}

/// Sampled sup-norm data for the approximation step. Norm estimates are
/// floating-point only; exactness is reserved for the algebraic
/// certificates.
struct ApproxErrorReport {
  double sup_module = 0;          // sup over samples of |p - p~|
  double sup_alpha = 0;           // componentwise sup of the scalar error
  double sup_u = 0;               // componentwise sup of the vector error
  double mixed_norm = 0;          // {sup_alpha^2 + sup_u^2}^{1/2}
  Polynomial3 eta;                // the exact correction term
};

/// Fibonacci-sphere sample directions.
inline std::vector<std::array<double, 3>> fibonacci_sphere(int count) {
  std::vector<std::array<double, 3>> pts;
  pts.reserve(static_cast<size_t>(count));
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / count;
    const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = 2.0 * M_PI * i / golden;
    pts.push_back({rad * std::cos(theta), rad * std::sin(theta), z});
  }
  return pts;
}

struct ApproxResult {
  QuaternionPolyField p_tilde;
  CorrectionReport correction;
  ApproxErrorReport error;
};

/// Runs the correction pipeline on the perturbed vector part and completes
/// the result to a harmonic field matching the original scalar value at 0.
inline ApproxResult approximate(const QuaternionPolyField& p_target,
                                const VectorPoly& perturbation, int sphere_points = 2562,
                                int radii = 8) {
  if (!is_harmonic_field(p_target))
    throw std::invalid_argument("approximate: target is not harmonic");
  if (!laplacian(perturbation).is_zero())
    throw std::invalid_argument("approximate: perturbation must be componentwise harmonic");

  ApproxResult res;
  res.correction = divergence_correction(p_target.u + perturbation);
  const Vec3 origin = Vec3::Zero();
  res.p_tilde =
      complete_to_quaternion(res.correction.u_tilde, p_target.alpha.evaluate(origin));
  res.error.eta = res.correction.eta;

  const QuaternionPolyField diff = p_target - res.p_tilde;
  const auto dirs = fibonacci_sphere(sphere_points);
  for (int ri = 1; ri <= radii; ++ri) {
    const double rad = static_cast<double>(ri) / radii;
    for (const auto& dvec : dirs) {
      const std::array<double, 3> x{rad * dvec[0], rad * dvec[1], rad * dvec[2]};
      const double da = diff.alpha.evaluate_double(x);
      const double d1 = diff.u.c1.evaluate_double(x);
      const double d2 = diff.u.c2.evaluate_double(x);
      const double d3 = diff.u.c3.evaluate_double(x);
      res.error.sup_module =
          std::max(res.error.sup_module, std::sqrt(da * da + d1 * d1 + d2 * d2 + d3 * d3));
      res.error.sup_alpha = std::max(res.error.sup_alpha, std::abs(da));
      res.error.sup_u = std::max(res.error.sup_u,
                                 std::sqrt(d1 * d1 + d2 * d2 + d3 * d3));
    }
  }
  res.error.mixed_norm = std::sqrt(res.error.sup_alpha * res.error.sup_alpha +
                                   res.error.sup_u * res.error.sup_u);
  return res;
}

}  // namespace hqf
