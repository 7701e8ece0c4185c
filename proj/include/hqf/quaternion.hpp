#pragma once

#include "hqf/rational.hpp"

#include <array>
#include <ostream>

namespace hqf {

/// Geometric quaternion: a scalar paired with a 3-vector.
struct Quaternion {
  Rational s;
  Vec3 v;

  Quaternion() : s(0), v(Vec3::Zero()) {}
  Quaternion(Rational scalar, Vec3 vec) : s(std::move(scalar)), v(std::move(vec)) {}

  static Quaternion zero() { return {}; }
  static Quaternion one() { return {Rational(1), Vec3::Zero()}; }
  static Quaternion unit_i() { return {Rational(0), make_vec3(1, 0, 0)}; }
  static Quaternion unit_j() { return {Rational(0), make_vec3(0, 1, 0)}; }
  static Quaternion unit_k() { return {Rational(0), make_vec3(0, 0, 1)}; }

  bool is_zero() const { return s == 0 && v(0) == 0 && v(1) == 0 && v(2) == 0; }
};

inline bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.s == b.s && a.v == b.v;
}
inline bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

inline Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.s + b.s, a.v + b.v};
}
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.s - b.s, a.v - b.v};
}
inline Quaternion operator-(const Quaternion& a) { return {-a.s, -a.v}; }

inline Quaternion operator*(const Rational& c, const Quaternion& q) {
  return {c * q.s, (c * q.v).eval()};
}

/// Product of geometric quaternions: {ab - u.v, av + bu + u^v}.
inline Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {p.s * q.s - p.v.dot(q.v),
          (p.s * q.v + q.s * p.v + p.v.cross(q.v)).eval()};
}

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return mul(p, q);
}

/// Squared module a^2 + |u|^2; kept squared so it stays rational.
inline Rational module_sq(const Quaternion& q) {
  return q.s * q.s + q.v.squaredNorm();
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "{" << q.s.get_str() << ", (" << q.v(0).get_str() << ", "
            << q.v(1).get_str() << ", " << q.v(2).get_str() << ")}";
}

/// Quaternion in the Hamilton picture: coefficients on 1, i, j, k.
/// The product is driven by the basis multiplication table, independent of
/// the geometric product formula, so the two pictures cross-check each other.
struct HamiltonQuaternion {
  std::array<Rational, 4> c;  // 1, i, j, k

  HamiltonQuaternion() : c{Rational(0), Rational(0), Rational(0), Rational(0)} {}
  explicit HamiltonQuaternion(std::array<Rational, 4> coeffs) : c(std::move(coeffs)) {}
};

inline bool operator==(const HamiltonQuaternion& a, const HamiltonQuaternion& b) {
  return a.c == b.c;
}

inline HamiltonQuaternion mul(const HamiltonQuaternion& p, const HamiltonQuaternion& q) {
  // sign[a][b], idx[a][b] encode e_a e_b = sign * e_idx for the basis 1,i,j,k.
  static const int sign[4][4] = {{1, 1, 1, 1},
                                 {1, -1, 1, -1},
                                 {1, -1, -1, 1},
                                 {1, 1, -1, -1}};
  static const int idx[4][4] = {{0, 1, 2, 3},
                                {1, 0, 3, 2},
                                {2, 3, 0, 1},
                                {3, 2, 1, 0}};
  HamiltonQuaternion r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (p.c[a] == 0 || q.c[b] == 0) continue;
      Rational t = p.c[a] * q.c[b];
      if (sign[a][b] < 0) t = -t;
      r.c[idx[a][b]] += t;
    }
  return r;
}

/// The identification of the two pictures: h = a + u1 i + u2 j + u3 k
/// corresponds to the pair {a, (u1, u2, u3)}.
inline Quaternion embed(const HamiltonQuaternion& h) {
  Vec3 v;
  v << h.c[1], h.c[2], h.c[3];
  return {h.c[0], v};
}

inline HamiltonQuaternion embed_inverse(const Quaternion& q) {
  return HamiltonQuaternion({q.s, q.v(0), q.v(1), q.v(2)});
}

}  // namespace hqf
