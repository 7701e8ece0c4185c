#pragma once

#include "hqf/spaces.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hqf {

/// Ordered family of pairwise non-collinear axes.
struct AxisFamily {
  std::vector<Axis> axes;

  explicit AxisFamily(std::vector<Axis> a) : axes(std::move(a)) {
    for (size_t i = 0; i < axes.size(); ++i)
      for (size_t j = i + 1; j < axes.size(); ++j)
        if (coincident_up_to_sign(axes[i], axes[j]))
          throw std::invalid_argument("axis family contains a collinear pair");
  }

  int size() const { return static_cast<int>(axes.size()); }
};

struct Decomposition {
  QuaternionPolyField target;
  std::vector<std::pair<Axis, QuaternionPolyField>> parts;
  QuaternionPolyField residual;

  bool complete() const { return residual.is_zero(); }
};

namespace detail {

/// Columns: the two axial-scalar basis elements of every axis in the
/// family, as coordinates in the degree-n monomial space.
inline MatX axial_union_matrix(int n, const AxisFamily& fam) {
  const int nn = homogeneous_dim(n);
  MatX m = MatX::Zero(nn, 2 * fam.size());
  for (int k = 0; k < fam.size(); ++k) {
    const ScalarBasis& b = basis_axial_scalar(n, fam.axes[static_cast<size_t>(k)]);
    for (int j = 0; j < b.size(); ++j)
      m.col(2 * k + j) = scalar_coords(b.elements[static_cast<size_t>(j)], n);
  }
  return m;
}

/// Deterministic stream of primitive integer axes, pairwise non-collinear
/// with everything already in `axes`. Enumerates integer vectors by growing
/// max-coordinate, lexicographically within each shell.
inline Axis next_enumerated_axis(const std::vector<Axis>& axes, int& shell, long& cursor) {
  for (;; ++shell, cursor = 0) {
    const long side = 2 * shell + 1;
    for (; cursor < side * side * side; ++cursor) {
      const long a = cursor / (side * side) - shell;
      const long b = (cursor / side) % side - shell;
      const long c = cursor % side - shell;
      if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != shell) continue;
      if (a == 0 && b == 0 && c == 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      if (a < 0 || (a == 0 && (b < 0 || (b == 0 && c < 0)))) continue;
      Axis cand(make_vec3(a, b, c));
      bool clash = false;
      for (const Axis& ax : axes)
        if (coincident_up_to_sign(cand, ax)) {
          clash = true;
          break;
        }
      if (!clash) {
        ++cursor;
        return cand;
      }
    }
  }
}

}  // namespace detail

/// Exact rank of the union of the axial scalar subspaces of the family:
/// 2r for r <= n, 2n+1 for r > n.
inline int span_dimension(int n, const AxisFamily& fam) {
  if (n < 1) throw std::invalid_argument("span_dimension: degree must be >= 1");
  return rank(detail::axial_union_matrix(n, fam));
}

/// The unique (up to one rational scale) relation phi_1 + ... + phi_{n+1} = 0
/// with nonzero phi_k axial for the k-th axis. The scale is fixed by making
/// the graded-lex-leading coefficient of phi_1 equal to 1.
inline std::vector<Polynomial3> kernel_relation(int n, const AxisFamily& fam) {
  if (fam.size() != n + 1)
    throw std::invalid_argument("kernel_relation: family must have n+1 axes");
  const MatX m = detail::axial_union_matrix(n, fam);
  const MatX ker = nullspace(m);
  if (ker.cols() != 1) {
    std::ostringstream os;
    os << "kernel_relation: kernel dimension is " << ker.cols() << ", expected 1";
    throw std::runtime_error(os.str());
  }
  std::vector<Polynomial3> phis;
  for (int k = 0; k <= n; ++k) {
    const ScalarBasis& b = basis_axial_scalar(n, fam.axes[static_cast<size_t>(k)]);
    Polynomial3 phi;
    for (int j = 0; j < b.size(); ++j)
      phi += ker(2 * k + j, 0) * b.elements[static_cast<size_t>(j)];
    phis.push_back(std::move(phi));
  }
  const Rational lead = phis.front().leading_coefficient();
  if (lead == 0) throw std::runtime_error("kernel_relation: phi_1 vanished");
  const Rational inv = 1 / lead;
  for (auto& phi : phis) phi *= inv;
  for (const auto& phi : phis)
    if (phi.is_zero()) throw std::runtime_error("kernel_relation: a summand vanished");
  return phis;
}

struct StarField {
  QuaternionPolyField field;  // {0, u*}
  std::vector<std::pair<Axis, QuaternionPolyField>> parts;
};

/// The canonical zero-scalar harmonic field of the family: the sum of the
/// axial lifts of the kernel relation. Its scalar part cancels exactly and
/// its vector part u* is nonzero and curl-free.
inline StarField star_field(int n, const AxisFamily& fam) {
  const auto phis = kernel_relation(n, fam);
  StarField out;
  for (int k = 0; k <= n; ++k) {
    const Axis& w = fam.axes[static_cast<size_t>(k)];
    QuaternionPolyField part = axial_lift(phis[static_cast<size_t>(k)], w);
    out.field = out.field + part;
    out.parts.emplace_back(w, std::move(part));
  }
  if (!out.field.alpha.is_zero())
    throw std::logic_error("star_field: scalar part did not cancel");
  if (out.field.u.is_zero()) throw std::logic_error("star_field: u* vanished");
  if (!rot(out.field.u).is_zero())
    throw std::logic_error("star_field: u* is not curl-free");
  if (!is_harmonic_field(out.field))
    throw std::logic_error("star_field: {0, u*} is not harmonic");
  return out;
}

/// Potential of the star field: beta with grad(beta) = u*, harmonic of
/// degree n+1.
inline Polynomial3 star_potential(const QuaternionPolyField& s, int n) {
  if (!s.alpha.is_zero())
    throw std::invalid_argument("star_potential: scalar part must vanish");
  Polynomial3 beta = euler_potential(s.u, n);
  if (!laplacian(beta).is_zero())
    throw std::logic_error("star_potential: potential is not harmonic");
  return beta;
}

/// Exact representation of a harmonic homogeneous scalar over the axial
/// subspaces of the family. Such representations are not unique; the
/// canonical one returned here is the minimum-norm solution of the exact
/// linear system under deterministic pivoting.
inline std::vector<std::pair<Axis, Polynomial3>> decompose_scalar(const Polynomial3& alpha,
                                                                  const AxisFamily& fam) {
  int n = -1;
  if (!alpha.is_homogeneous(&n))
    throw std::invalid_argument("decompose_scalar: input not homogeneous");
  if (alpha.is_zero()) return {};
  if (!laplacian(alpha).is_zero())
    throw std::invalid_argument("decompose_scalar: input not harmonic");
  if (n == 0) return {{fam.axes.at(0), alpha}};
  if (fam.size() <= n)
    throw std::invalid_argument(
        "decompose_scalar: family too small, the axial spans only reach dimension 2r");

  const MatX m = detail::axial_union_matrix(n, fam);
  const auto x = solve_min_norm(m, scalar_coords(alpha, n));
  if (!x) throw std::runtime_error("decompose_scalar: exact solve failed");
  std::vector<std::pair<Axis, Polynomial3>> parts;
  Polynomial3 check;
  for (int k = 0; k < fam.size(); ++k) {
    const ScalarBasis& b = basis_axial_scalar(n, fam.axes[static_cast<size_t>(k)]);
    Polynomial3 phi;
    for (int j = 0; j < b.size(); ++j)
      phi += (*x)(2 * k + j) * b.elements[static_cast<size_t>(j)];
    check += phi;
    if (!phi.is_zero()) parts.emplace_back(fam.axes[static_cast<size_t>(k)], std::move(phi));
  }
  if (check != alpha) throw std::logic_error("decompose_scalar: parts do not sum to input");
  return parts;
}

namespace detail {

/// Columns: lifted axial harmonic fields (two per axis) in stacked field
/// coordinates of degree n.
inline MatX lifted_union_matrix(int n, const std::vector<Axis>& axes) {
  const int nn = homogeneous_dim(n);
  MatX m = MatX::Zero(4 * nn, 2 * static_cast<int>(axes.size()));
  for (size_t k = 0; k < axes.size(); ++k) {
    const ScalarBasis& b = basis_axial_scalar(n, axes[k]);
    for (int j = 0; j < b.size(); ++j) {
      const QuaternionPolyField lift = axial_lift(b.elements[static_cast<size_t>(j)], axes[k]);
      m.col(2 * static_cast<int>(k) + j) = field_coords(lift, n);
    }
  }
  return m;
}

}  // namespace detail

/// Complete decomposition of a harmonic homogeneous field into axial
/// harmonic parts: scalar part first (through axial lifts), then the
/// zero-scalar remainder by exact solve over lifted axial bases of an
/// adaptively enlarged family. The cap 4n+4 is loud-failure headroom: if
/// the residual survives that many axes, something is wrong in the solver,
/// not in the mathematics.
inline Decomposition decompose_quat(const QuaternionPolyField& p, const AxisFamily& fam) {
  Decomposition d;
  d.target = p;
  if (p.is_zero()) return d;
  if (!is_harmonic_field(p))
    throw std::invalid_argument("decompose_quat: input field is not harmonic");
  int n = -1;
  for (int k = 0; k < 4; ++k) {
    int dk = -1;
    if (!p.component(k).is_homogeneous(&dk))
      throw std::invalid_argument("decompose_quat: input field is not homogeneous");
    if (dk >= 0) {
      if (n >= 0 && n != dk)
        throw std::invalid_argument("decompose_quat: mixed component degrees");
      n = dk;
    }
  }

  if (n == 0) {
    d.parts.emplace_back(fam.axes.at(0), p);
    return d;
  }

  // Already axial for one of the given axes: a one-part decomposition.
  for (const Axis& w : fam.axes)
    if (is_axial(p, w)) {
      d.parts.emplace_back(w, p);
      return d;
    }

  std::vector<Axis> axes = fam.axes;
  int shell = 1;
  long cursor = 0;
  while (static_cast<int>(axes.size()) < n + 1)
    axes.push_back(detail::next_enumerated_axis(axes, shell, cursor));

  // Stage 1: represent the scalar part, lift each summand.
  const auto scalar_parts = decompose_scalar(p.alpha, AxisFamily(axes));
  std::vector<std::pair<Axis, QuaternionPolyField>> parts;
  QuaternionPolyField lifted_sum;
  for (const auto& [w, phi] : scalar_parts) {
    QuaternionPolyField lift = axial_lift(phi, w);
    lifted_sum = lifted_sum + lift;
    parts.emplace_back(w, std::move(lift));
  }

  // Stage 2: the remainder has zero scalar part; expand it over lifted
  // axial bases, enlarging the family until the system becomes solvable.
  const QuaternionPolyField p0 = p - lifted_sum;
  if (!p0.alpha.is_zero())
    throw std::logic_error("decompose_quat: remainder has nonzero scalar part");
  if (!p0.is_zero()) {
    const VecX target = field_coords(p0, n);
    const int cap = 4 * n + 4;
    std::optional<VecX> x;
    while (true) {
      const MatX m = detail::lifted_union_matrix(n, axes);
      x = solve_min_norm(m, target);
      if (x) break;
      if (static_cast<int>(axes.size()) >= cap) {
        d.parts = std::move(parts);
        d.residual = p0;
        throw std::runtime_error(
            "decompose_quat: axis cap reached with nonzero residual (solver bug)");
      }
      axes.push_back(detail::next_enumerated_axis(axes, shell, cursor));
    }
    for (size_t k = 0; k < axes.size(); ++k) {
      const ScalarBasis& b = basis_axial_scalar(n, axes[k]);
      QuaternionPolyField part;
      bool nonzero = false;
      for (int j = 0; j < b.size(); ++j) {
        const Rational& c = (*x)(2 * static_cast<int>(k) + j);
        if (c == 0) continue;
        part = part + c * axial_lift(b.elements[static_cast<size_t>(j)], axes[k]);
        nonzero = true;
      }
      if (nonzero) parts.emplace_back(axes[k], std::move(part));
    }
  }

  // Merge parts sharing a line.
  for (auto& [w, q] : parts) {
    bool merged = false;
    for (auto& [w2, q2] : d.parts)
      if (coincident_up_to_sign(w, w2)) {
        q2 = q2 + q;
        merged = true;
        break;
      }
    if (!merged) d.parts.emplace_back(w, q);
  }

  QuaternionPolyField sum;
  for (const auto& [w, q] : d.parts) sum = sum + q;
  d.residual = p - sum;
  if (!d.residual.is_zero())
    throw std::logic_error("decompose_quat: residual is nonzero after solve");
  return d;
}

/// Decomposition of an arbitrary harmonic polynomial field: split into
/// homogeneous components, decompose each, merge parts sharing an axis.
inline Decomposition decompose_full(const QuaternionPolyField& p, const AxisFamily& fam) {
  Decomposition d;
  d.target = p;
  if (!is_harmonic_field(p))
    throw std::invalid_argument("decompose_full: input field is not harmonic");
  for (const auto& [deg, piece] : homogeneous_components(p)) {
    const Decomposition dd = decompose_quat(piece, fam);
    for (const auto& [w, q] : dd.parts) {
      bool merged = false;
      for (auto& [w2, q2] : d.parts)
        if (coincident_up_to_sign(w, w2)) {
          q2 = q2 + q;
          merged = true;
          break;
        }
      if (!merged) d.parts.emplace_back(w, q);
    }
  }
  QuaternionPolyField sum;
  for (const auto& [w, q] : d.parts) sum = sum + q;
  d.residual = p - sum;
  return d;
}

}  // namespace hqf
