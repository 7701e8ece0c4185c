#pragma once

#include "hqf/axis.hpp"
#include "hqf/polynomial.hpp"
#include "hqf/quaternion.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hqf {

/// Polynomial vector field: components along i, j, k.
struct VectorPoly {
  Polynomial3 c1, c2, c3;

  VectorPoly() = default;
  VectorPoly(Polynomial3 a, Polynomial3 b, Polynomial3 c)
      : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)) {}

  const Polynomial3& operator[](int k) const { return k == 0 ? c1 : (k == 1 ? c2 : c3); }
  Polynomial3& operator[](int k) { return k == 0 ? c1 : (k == 1 ? c2 : c3); }

  bool is_zero() const { return c1.is_zero() && c2.is_zero() && c3.is_zero(); }

  static VectorPoly constant(const Vec3& v) {
    return {Polynomial3::constant(v(0)), Polynomial3::constant(v(1)),
            Polynomial3::constant(v(2))};
  }
};

inline bool operator==(const VectorPoly& a, const VectorPoly& b) {
  return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3;
}
inline bool operator!=(const VectorPoly& a, const VectorPoly& b) { return !(a == b); }

inline VectorPoly operator+(const VectorPoly& a, const VectorPoly& b) {
  return {a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
}
inline VectorPoly operator-(const VectorPoly& a, const VectorPoly& b) {
  return {a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
}
inline VectorPoly operator-(const VectorPoly& a) { return {-a.c1, -a.c2, -a.c3}; }
inline VectorPoly operator*(const Rational& c, const VectorPoly& u) {
  return {c * u.c1, c * u.c2, c * u.c3};
}
inline VectorPoly operator*(const Polynomial3& s, const Vec3& w) {
  return {s * Polynomial3::constant(w(0)), s * Polynomial3::constant(w(1)),
          s * Polynomial3::constant(w(2))};
}

inline Polynomial3 dot(const VectorPoly& u, const Vec3& w) {
  return u.c1 * Polynomial3::constant(w(0)) + u.c2 * Polynomial3::constant(w(1)) +
         u.c3 * Polynomial3::constant(w(2));
}
inline Polynomial3 dot(const VectorPoly& u, const VectorPoly& v) {
  return u.c1 * v.c1 + u.c2 * v.c2 + u.c3 * v.c3;
}
inline VectorPoly cross(const VectorPoly& u, const VectorPoly& v) {
  return {u.c2 * v.c3 - u.c3 * v.c2, u.c3 * v.c1 - u.c1 * v.c3,
          u.c1 * v.c2 - u.c2 * v.c1};
}
inline VectorPoly cross(const Vec3& w, const VectorPoly& u) {
  return cross(VectorPoly::constant(w), u);
}

// -- vector calculus ---------------------------------------------------------

inline VectorPoly grad(const Polynomial3& a) {
  return {a.derivative(0), a.derivative(1), a.derivative(2)};
}

inline Polynomial3 div(const VectorPoly& u) {
  return u.c1.derivative(0) + u.c2.derivative(1) + u.c3.derivative(2);
}

inline VectorPoly rot(const VectorPoly& u) {
  return {u.c3.derivative(1) - u.c2.derivative(2),
          u.c1.derivative(2) - u.c3.derivative(0),
          u.c2.derivative(0) - u.c1.derivative(1)};
}

inline Polynomial3 laplacian(const Polynomial3& a) {
  return a.derivative(0).derivative(0) + a.derivative(1).derivative(1) +
         a.derivative(2).derivative(2);
}

inline VectorPoly laplacian(const VectorPoly& u) {
  return {laplacian(u.c1), laplacian(u.c2), laplacian(u.c3)};
}

/// Directional derivative w . grad, using the unnormalized axis vector
/// (axiality is invariant under scaling of the axis).
inline Polynomial3 dir_deriv(const Polynomial3& a, const Axis& w) {
  return dot(grad(a), w.v);
}

inline VectorPoly dir_deriv_vec(const VectorPoly& u, const Axis& w) {
  return {dir_deriv(u.c1, w), dir_deriv(u.c2, w), dir_deriv(u.c3, w)};
}

inline Vec3 evaluate(const VectorPoly& u, const Vec3& x) {
  Vec3 r;
  r << u.c1.evaluate(x), u.c2.evaluate(x), u.c3.evaluate(x);
  return r;
}

/// For a curl-free homogeneous field u of degree n, the Euler identity
/// x . grad(b) = (n+1) b yields the potential b = (x . u) / (n+1).
inline Polynomial3 euler_potential(const VectorPoly& u, int n) {
  if (!(rot(u) == VectorPoly{}))
    throw std::invalid_argument("euler_potential: field is not curl-free");
  for (int k = 0; k < 3; ++k) {
    int d = -1;
    if (!u[k].is_homogeneous(&d) || (d >= 0 && d != n))
      throw std::invalid_argument("euler_potential: field is not homogeneous of the stated degree");
  }
  Polynomial3 xu;
  for (int k = 0; k < 3; ++k) xu += Polynomial3::variable(k) * u[k];
  Polynomial3 beta = xu * Rational(1, static_cast<unsigned long>(n) + 1);
  if (grad(beta) != u)
    throw std::logic_error("euler_potential: gradient postcondition failed");
  return beta;
}

// -- quaternion polynomial fields --------------------------------------------

/// Pair {alpha, u} of a scalar polynomial and a polynomial vector field.
struct QuaternionPolyField {
  Polynomial3 alpha;
  VectorPoly u;

  QuaternionPolyField() = default;
  QuaternionPolyField(Polynomial3 a, VectorPoly v)
      : alpha(std::move(a)), u(std::move(v)) {}

  static QuaternionPolyField constant(const Quaternion& h) {
    return {Polynomial3::constant(h.s), VectorPoly::constant(h.v)};
  }

  bool is_zero() const { return alpha.is_zero() && u.is_zero(); }

  const Polynomial3& component(int k) const { return k == 0 ? alpha : u[k - 1]; }
};

inline bool operator==(const QuaternionPolyField& a, const QuaternionPolyField& b) {
  return a.alpha == b.alpha && a.u == b.u;
}
inline bool operator!=(const QuaternionPolyField& a, const QuaternionPolyField& b) {
  return !(a == b);
}

inline QuaternionPolyField operator+(const QuaternionPolyField& a,
                                     const QuaternionPolyField& b) {
  return {a.alpha + b.alpha, a.u + b.u};
}
inline QuaternionPolyField operator-(const QuaternionPolyField& a,
                                     const QuaternionPolyField& b) {
  return {a.alpha - b.alpha, a.u - b.u};
}
inline QuaternionPolyField operator-(const QuaternionPolyField& a) {
  return {-a.alpha, -a.u};
}
inline QuaternionPolyField operator*(const Rational& c, const QuaternionPolyField& p) {
  return {c * p.alpha, c * p.u};
}

/// Pointwise quaternion product of fields.
inline QuaternionPolyField mul(const QuaternionPolyField& p,
                               const QuaternionPolyField& q) {
  Polynomial3 s = p.alpha * q.alpha - dot(p.u, q.u);
  VectorPoly v{p.alpha * q.u.c1 + q.alpha * p.u.c1,
               p.alpha * q.u.c2 + q.alpha * p.u.c2,
               p.alpha * q.u.c3 + q.alpha * p.u.c3};
  return {std::move(s), v + cross(p.u, q.u)};
}

/// Left action of a constant quaternion on a field.
inline QuaternionPolyField mul(const Quaternion& h, const QuaternionPolyField& p) {
  return mul(QuaternionPolyField::constant(h), p);
}

inline Quaternion evaluate(const QuaternionPolyField& p, const Vec3& x) {
  return {p.alpha.evaluate(x), evaluate(p.u, x)};
}

/// Harmonicity: grad(alpha) = rot(u) and div(u) = 0 as exact identities.
inline bool is_harmonic_field(const QuaternionPolyField& p) {
  return grad(p.alpha) == rot(p.u) && div(p.u).is_zero();
}

inline bool is_axial(const Polynomial3& a, const Axis& w) {
  return dir_deriv(a, w).is_zero();
}

inline bool is_axial(const QuaternionPolyField& p, const Axis& w) {
  return is_axial(p.alpha, w) && is_axial(p.u.c1, w) && is_axial(p.u.c2, w) &&
         is_axial(p.u.c3, w);
}

/// Splits all four components by total degree. Harmonicity is degree-graded,
/// so each piece of a harmonic field is again harmonic.
inline std::vector<std::pair<int, QuaternionPolyField>> homogeneous_components(
    const QuaternionPolyField& p) {
  std::vector<unsigned> degrees;
  for (int k = 0; k < 4; ++k)
    for (unsigned d : p.component(k).present_degrees()) degrees.push_back(d);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  std::vector<std::pair<int, QuaternionPolyField>> out;
  for (unsigned d : degrees) {
    QuaternionPolyField piece{p.alpha.homogeneous_component(d),
                              {p.u.c1.homogeneous_component(d),
                               p.u.c2.homogeneous_component(d),
                               p.u.c3.homogeneous_component(d)}};
    out.emplace_back(static_cast<int>(d), std::move(piece));
  }
  return out;
}

}  // namespace hqf
