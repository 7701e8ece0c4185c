#pragma once

#include "hqf/characters.hpp"
#include "hqf/decomp.hpp"
#include "hqf/spaces.hpp"

#include <random>
#include <vector>

namespace hqf {

/// All randomized suites run off one of these, seeded explicitly, so every
/// report is reproducible byte for byte.
using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long max_num = 20, long max_den = 10) {
  const long num = rand_int(rng, -max_num, max_num);
  const long den = rand_int(rng, 1, max_den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Axis random_axis(Rng& rng, long span = 9) {
  while (true) {
    const long a = rand_int(rng, -span, span);
    const long b = rand_int(rng, -span, span);
    const long c = rand_int(rng, -span, span);
    if (a == 0 && b == 0 && c == 0) continue;
    return Axis(make_vec3(a, b, c));
  }
}

inline AxisFamily random_axis_family(Rng& rng, int count, long span = 9) {
  std::vector<Axis> axes;
  while (static_cast<int>(axes.size()) < count) {
    Axis cand = random_axis(rng, span);
    bool clash = false;
    for (const Axis& a : axes)
      if (coincident_up_to_sign(cand, a)) {
        clash = true;
        break;
      }
    if (!clash) axes.push_back(std::move(cand));
  }
  return AxisFamily(std::move(axes));
}

/// Rational orthonormal right-handed frame from a Pythagorean-quadruple
/// rotation: the rows of the rotation matrix of an integer quaternion,
/// divided by its squared module, are exactly orthonormal with determinant 1.
inline Frame random_frame(Rng& rng, long span = 5) {
  while (true) {
    const long a = rand_int(rng, -span, span);
    const long b = rand_int(rng, -span, span);
    const long c = rand_int(rng, -span, span);
    const long d = rand_int(rng, -span, span);
    const long s = a * a + b * b + c * c + d * d;
    if (s == 0) continue;
    const Rational inv(1, s);
    Vec3 r1, r2, r3;
    r1 << Rational(a * a + b * b - c * c - d * d) * inv, Rational(2 * (b * c - a * d)) * inv,
        Rational(2 * (b * d + a * c)) * inv;
    r2 << Rational(2 * (b * c + a * d)) * inv, Rational(a * a - b * b + c * c - d * d) * inv,
        Rational(2 * (c * d - a * b)) * inv;
    r3 << Rational(2 * (b * d - a * c)) * inv, Rational(2 * (c * d + a * b)) * inv,
        Rational(a * a - b * b - c * c + d * d) * inv;
    return Frame(r1, r2, r3);
  }
}

/// Rational point with |x|^2 <= 1 (componentwise at most 1/2 in module).
inline Vec3 random_point_in_ball(Rng& rng, long resolution = 24) {
  Vec3 x;
  for (int k = 0; k < 3; ++k) {
    Rational r(rand_int(rng, -resolution, resolution), 2 * resolution);
    r.canonicalize();
    x(k) = r;
  }
  return x;
}

inline Polynomial3 random_harmonic_scalar(Rng& rng, int degree) {
  const ScalarBasis& b = basis_harmonic_scalar(degree);
  Polynomial3 p;
  for (const Polynomial3& e : b.elements) p += random_rational(rng, 9, 4) * e;
  return p;
}

/// Componentwise-harmonic vector polynomial with parts in degrees <= max_degree.
inline VectorPoly random_harmonic_vector(Rng& rng, int deg_max) {
  VectorPoly v;
  for (int k = 0; k < 3; ++k) {
    Polynomial3 comp;
    for (int d = 0; d <= deg_max; ++d)
      if (rand_int(rng, 0, 2) != 0) comp += random_harmonic_scalar(rng, d);
    v[k] = std::move(comp);
  }
  return v;
}

inline QuaternionPolyField random_harmonic_field(Rng& rng, int degree) {
  const FieldBasis& b = basis_quat_harmonic(degree);
  QuaternionPolyField p;
  for (const QuaternionPolyField& e : b.elements)
    p = p + random_rational(rng, 9, 4) * e;
  return p;
}

}  // namespace hqf
