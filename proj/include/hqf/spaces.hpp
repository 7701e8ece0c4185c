#pragma once

#include "hqf/fields.hpp"
#include "hqf/linalg.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hqf {

/// Degree cap for basis construction; dim of the homogeneous spaces grows
/// quadratically and desk scale never needs more.
inline std::atomic<int>& max_degree() {
  static std::atomic<int> cap{12};
  return cap;
}

/// Monomials of total degree n in graded-lex order; size (n+1)(n+2)/2.
inline std::vector<Monomial> monomial_basis(int n) {
  if (n < 0) throw std::invalid_argument("monomial_basis: negative degree");
  if (n > max_degree().load())
    throw std::invalid_argument("monomial_basis: degree exceeds cap " +
                                std::to_string(max_degree().load()));
  std::vector<Monomial> ms;
  for (int e1 = n; e1 >= 0; --e1)
    for (int e2 = n - e1; e2 >= 0; --e2) {
      Monomial m;
      m.e = {static_cast<unsigned>(e1), static_cast<unsigned>(e2),
             static_cast<unsigned>(n - e1 - e2)};
      ms.push_back(m);
    }
  return ms;
}

inline int homogeneous_dim(int n) { return (n + 1) * (n + 2) / 2; }

/// Coordinates of a homogeneous degree-n polynomial in the monomial basis.
inline VecX scalar_coords(const Polynomial3& p, int n) {
  int d = -1;
  if (!p.is_homogeneous(&d) || (d >= 0 && d != n))
    throw std::invalid_argument("scalar_coords: polynomial not homogeneous of expected degree");
  const auto ms = monomial_basis(n);
  VecX x = VecX::Zero(static_cast<int>(ms.size()));
  for (size_t i = 0; i < ms.size(); ++i) x(static_cast<int>(i)) = p.coefficient(ms[i]);
  return x;
}

inline Polynomial3 scalar_from_coords(const VecX& x, int n) {
  const auto ms = monomial_basis(n);
  Polynomial3 p;
  for (size_t i = 0; i < ms.size(); ++i) p.add_term(ms[i], x(static_cast<int>(i)));
  return p;
}

/// Matrix of a linear operator taking homogeneous degree n_from scalars to
/// homogeneous degree n_to scalars, columns indexed by the monomial basis.
inline MatX operator_matrix(int n_from, int n_to,
                            const std::function<Polynomial3(const Polynomial3&)>& op) {
  const auto from = monomial_basis(n_from);
  const int rows = homogeneous_dim(n_to);
  MatX m = MatX::Zero(rows, static_cast<int>(from.size()));
  for (size_t j = 0; j < from.size(); ++j) {
    const Polynomial3 img = op(Polynomial3::term(from[j], Rational(1)));
    if (img.is_zero()) continue;
    m.col(static_cast<int>(j)) = scalar_coords(img, n_to);
  }
  return m;
}

enum class BasisKind { ScalarHarmonic, ScalarAxial, QuatHarmonic, QuatAxial, QuatZeroScalar };

struct ScalarBasis {
  int degree = 0;
  BasisKind kind = BasisKind::ScalarHarmonic;
  std::vector<Polynomial3> elements;
  /// Set for the degenerate n = 0 axial case (constants, dimension 1).
  bool degenerate = false;

  int size() const { return static_cast<int>(elements.size()); }
};

struct FieldBasis {
  int degree = 0;
  BasisKind kind = BasisKind::QuatHarmonic;
  std::vector<QuaternionPolyField> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

namespace detail {

inline std::vector<Polynomial3> polys_from_nullspace(const MatX& ker, int n) {
  std::vector<Polynomial3> out;
  for (int j = 0; j < ker.cols(); ++j) out.push_back(scalar_from_coords(ker.col(j), n));
  return out;
}

inline std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

/// Basis of the harmonic homogeneous scalars of degree n (kernel of the
/// Laplacian on the monomial space); dimension 2n+1 for n >= 1, 1 for n = 0.
inline const ScalarBasis& basis_harmonic_scalar(int n) {
  static std::map<int, ScalarBasis> cache;
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ScalarBasis b;
  b.degree = n;
  b.kind = BasisKind::ScalarHarmonic;
  if (n <= 1) {
    if (n == 0)
      b.elements = {Polynomial3::constant(Rational(1))};
    else
      b.elements = {Polynomial3::variable(0), Polynomial3::variable(1),
                    Polynomial3::variable(2)};
  } else {
    const MatX lap = operator_matrix(n, n - 2, [](const Polynomial3& p) { return laplacian(p); });
    b.elements = detail::polys_from_nullspace(nullspace(lap), n);
  }
  return cache.emplace(n, std::move(b)).first->second;
}

/// Basis of {a harmonic homogeneous of degree n : dir_deriv(a, w) = 0}.
/// Dimension exactly 2 for n >= 1; the n = 0 space is the constants and is
/// returned with the degenerate flag set.
inline const ScalarBasis& basis_axial_scalar(int n, const Axis& w) {
  static std::map<std::pair<int, std::array<std::string, 3>>, ScalarBasis> cache;
  const auto key = std::make_pair(n, axis_line_key(w));
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  ScalarBasis b;
  b.degree = n;
  b.kind = BasisKind::ScalarAxial;
  if (n == 0) {
    b.elements = {Polynomial3::constant(Rational(1))};
    b.degenerate = true;
  } else {
    const int rows_lap = n >= 2 ? homogeneous_dim(n - 2) : 0;
    const int rows_dir = homogeneous_dim(n - 1);
    MatX m = MatX::Zero(rows_lap + rows_dir, homogeneous_dim(n));
    if (n >= 2)
      m.topRows(rows_lap) =
          operator_matrix(n, n - 2, [](const Polynomial3& p) { return laplacian(p); });
    m.bottomRows(rows_dir) =
        operator_matrix(n, n - 1, [&w](const Polynomial3& p) { return dir_deriv(p, w); });
    b.elements = detail::polys_from_nullspace(nullspace(m), n);
  }
  return cache.emplace(key, std::move(b)).first->second;
}

/// Conjugate of an axial harmonic scalar: psi_tilde with
/// grad(psi_tilde) = w ^ grad(phi) for the unnormalized axis w. The scale
/// w.w is returned alongside; the normalized conjugate would be
/// psi_tilde / sqrt(w.w), which never needs to be formed.
inline std::pair<Polynomial3, Rational> conjugate(const Polynomial3& phi, const Axis& w) {
  if (!laplacian(phi).is_zero())
    throw std::invalid_argument("conjugate: phi is not harmonic");
  if (!is_axial(phi, w))
    throw std::invalid_argument("conjugate: phi is not axial for the given axis");
  // g = w ^ grad(phi) is curl-free: rot g = w * lap(phi) - grad(dir_deriv(phi, w)) = 0.
  Polynomial3 psi;
  for (unsigned d : phi.present_degrees()) {
    const Polynomial3 comp = phi.homogeneous_component(d);
    if (d == 0) continue;  // constants have zero conjugate
    const VectorPoly g = cross(w.v, grad(comp));
    psi += euler_potential(g, static_cast<int>(d) - 1);
  }
  if (rot(cross(w.v, grad(phi))).is_zero() == false)
    throw std::logic_error("conjugate: curl-free invariant failed");
  return {psi, w.norm_sq()};
}

/// Axial harmonic field {phi, (psi_tilde / (w.w)) w} built from phi; exactly
/// the unit-axis field {phi, psi omega} written scale-invariantly.
inline QuaternionPolyField axial_lift(const Polynomial3& phi, const Axis& w) {
  auto [psi, scale] = conjugate(phi, w);
  QuaternionPolyField p{phi, (psi * (Rational(1) / scale)) * w.v};
  if (!is_harmonic_field(p)) throw std::logic_error("axial_lift: harmonicity failed");
  return p;
}

/// The scalar s with u = s * w, for a field whose vector part is parallel
/// to the axis. Throws if the vector part is not of that form.
inline Polynomial3 axial_scalar(const QuaternionPolyField& p, const Axis& w) {
  Polynomial3 s = dot(p.u, w.v) * (Rational(1) / w.norm_sq());
  if (!(p.u == s * w.v))
    throw std::invalid_argument("axial_scalar: vector part is not parallel to the axis");
  return s;
}

/// Product of two coaxial harmonic fields:
/// {phi, s w}{lam, t w} = {phi lam - s t (w.w), (phi t + s lam) w}.
/// Closed and commutative in the w-axial harmonic fields.
inline QuaternionPolyField coaxial_mul(const QuaternionPolyField& p,
                                       const QuaternionPolyField& q, const Axis& w) {
  if (!is_axial(p, w) || !is_axial(q, w))
    throw std::invalid_argument("coaxial_mul: inputs are not axial for the given axis");
  const Polynomial3 s = axial_scalar(p, w);
  const Polynomial3 t = axial_scalar(q, w);
  const Rational ww = w.norm_sq();
  return {p.alpha * q.alpha - s * t * ww, (p.alpha * t + s * q.alpha) * w.v};
}

/// Coordinates of a homogeneous degree-n field in the stacked monomial
/// basis (alpha, u1, u2, u3).
inline VecX field_coords(const QuaternionPolyField& p, int n) {
  const int nn = homogeneous_dim(n);
  VecX x = VecX::Zero(4 * nn);
  for (int k = 0; k < 4; ++k) x.segment(k * nn, nn) = scalar_coords(p.component(k), n);
  return x;
}

inline QuaternionPolyField field_from_coords(const VecX& x, int n) {
  const int nn = homogeneous_dim(n);
  return {scalar_from_coords(x.segment(0, nn), n),
          {scalar_from_coords(x.segment(nn, nn), n),
           scalar_from_coords(x.segment(2 * nn, nn), n),
           scalar_from_coords(x.segment(3 * nn, nn), n)}};
}

namespace detail {

/// Rows expressing grad(alpha) - rot(u) = 0 and div(u) = 0 on the stacked
/// coordinates of degree-n fields. The Laplace constraints on the four
/// components follow from these, so they are not added.
inline MatX harmonicity_matrix(int n) {
  const int nn = homogeneous_dim(n);
  const int mm = homogeneous_dim(n - 1);
  MatX m = MatX::Zero(4 * mm, 4 * nn);
  const auto block = [&](int row, int col, int var, const Rational& sgn) {
    // d/dx_{var+1} acting from component col into row block `row`.
    MatX d = operator_matrix(n, n - 1, [var](const Polynomial3& p) { return p.derivative(var); });
    m.block(row * mm, col * nn, mm, nn) += sgn * d;
  };
  // grad(alpha)_k - rot(u)_k = 0 for k = 1..3
  block(0, 0, 0, 1);  // d1 alpha
  block(0, 3, 1, -1); // - d2 u3
  block(0, 2, 2, 1);  // + d3 u2
  block(1, 0, 1, 1);  // d2 alpha
  block(1, 1, 2, -1); // - d3 u1
  block(1, 3, 0, 1);  // + d1 u3
  block(2, 0, 2, 1);  // d3 alpha
  block(2, 2, 0, -1); // - d1 u2
  block(2, 1, 1, 1);  // + d2 u1
  // div u = 0
  block(3, 1, 0, 1);
  block(3, 2, 1, 1);
  block(3, 3, 2, 1);
  return m;
}

}  // namespace detail

/// Basis of the homogeneous harmonic quaternion fields of degree n:
/// exact kernel of {grad(alpha) = rot(u), div(u) = 0} on the four stacked
/// component spaces.
inline const FieldBasis& basis_quat_harmonic(int n) {
  static std::map<int, FieldBasis> cache;
  std::lock_guard<std::mutex> lock(detail::cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  FieldBasis b;
  b.degree = n;
  b.kind = BasisKind::QuatHarmonic;
  if (n == 0) {
    b.elements = {QuaternionPolyField::constant(Quaternion::one()),
                  QuaternionPolyField::constant(Quaternion::unit_i()),
                  QuaternionPolyField::constant(Quaternion::unit_j()),
                  QuaternionPolyField::constant(Quaternion::unit_k())};
  } else {
    const MatX ker = nullspace(detail::harmonicity_matrix(n));
    for (int j = 0; j < ker.cols(); ++j) b.elements.push_back(field_from_coords(ker.col(j), n));
  }
  return cache.emplace(n, std::move(b)).first->second;
}

/// Basis of the w-axial harmonic fields {phi, psi w}: the axial lifts of the
/// axial scalar basis. Size 2 for n >= 1. Componentwise axiality alone admits
/// a larger harmonic kernel (a second planar conjugate pair sits in the
/// vector components), so the lift image is constructed directly and its
/// independence is certified by rank.
inline FieldBasis basis_quat_axial(int n, const Axis& w) {
  FieldBasis b;
  b.degree = n;
  b.kind = BasisKind::QuatAxial;
  if (n == 0) {
    // Constant fields are axial for every axis.
    b.elements = basis_quat_harmonic(0).elements;
    return b;
  }
  const ScalarBasis& sb = basis_axial_scalar(n, w);
  for (const Polynomial3& phi : sb.elements) b.elements.push_back(axial_lift(phi, w));
  MatX m(4 * homogeneous_dim(n), b.size());
  for (int j = 0; j < b.size(); ++j)
    m.col(j) = field_coords(b.elements[static_cast<size_t>(j)], n);
  if (rank(m) != b.size())
    throw std::logic_error("basis_quat_axial: lifted basis is rank-deficient");
  return b;
}

}  // namespace hqf
