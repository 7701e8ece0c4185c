#pragma once

#include "hqf/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hqf {

/// Direction in R^3, stored unnormalized with rational components.
/// Every formula that the underlying theory states for a unit vector is
/// rewritten scale-invariantly, so no normalization (and no irrationals)
/// is ever needed.
struct Axis {
  Vec3 v;

  explicit Axis(Vec3 dir) : v(std::move(dir)) {
    if (v(0) == 0 && v(1) == 0 && v(2) == 0)
      throw std::invalid_argument("axis direction must be nonzero");
  }

  Rational norm_sq() const { return v.squaredNorm(); }
};

inline bool collinear(const Axis& a, const Axis& b) {
  return a.v.cross(b.v) == Vec3::Zero();
}

/// The pairwise-difference test on directions: proportional with either
/// sign counts as coincident.
inline bool coincident_up_to_sign(const Axis& a, const Axis& b) {
  return collinear(a, b);
}

inline bool operator==(const Axis& a, const Axis& b) { return a.v == b.v; }

/// Scale- and sign-canonical integer form, usable as a cache key for
/// constructions that only depend on the line spanned by the axis.
inline std::array<std::string, 3> axis_line_key(const Axis& a) {
  // Clear denominators, divide by content, fix sign of first nonzero entry.
  mpz_class den(1);
  for (int k = 0; k < 3; ++k) den = lcm(den, a.v(k).get_den());
  std::array<mpz_class, 3> n;
  mpz_class g(0);
  for (int k = 0; k < 3; ++k) {
    n[static_cast<unsigned>(k)] = a.v(k).get_num() * (den / a.v(k).get_den());
    g = gcd(g, n[static_cast<unsigned>(k)]);
  }
  for (auto& z : n) z /= g;
  for (auto& z : n) {
    if (z == 0) continue;
    if (z < 0)
      for (auto& w : n) w = -w;
    break;
  }
  return {n[0].get_str(), n[1].get_str(), n[2].get_str()};
}

}  // namespace hqf
