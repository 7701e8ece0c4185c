#pragma once

#include "hqf/decomp.hpp"
#include "hqf/density.hpp"
#include "hqf/fields.hpp"
#include "hqf/linalg.hpp"
#include "hqf/spaces.hpp"

#include <array>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hqf {

/// Right-handed orthonormal rational frame: w_k . w_l = delta_kl and the
/// cross products cycle (w1 ^ w2 = w3, ...). Exact rational frames of this
/// kind come from Pythagorean-quadruple rotation matrices.
struct Frame {
  Vec3 w1, w2, w3;

  Frame(Vec3 a, Vec3 b, Vec3 c) : w1(std::move(a)), w2(std::move(b)), w3(std::move(c)) {
    const auto unit = [](const Vec3& v) { return v.squaredNorm() == Rational(1); };
    if (!unit(w1) || !unit(w2) || !unit(w3) || w1.dot(w2) != 0 || w2.dot(w3) != 0 ||
        w3.dot(w1) != 0)
      throw std::invalid_argument("frame is not orthonormal");
    if (w1.cross(w2) != w3 || w2.cross(w3) != w1 || w3.cross(w1) != w2)
      throw std::invalid_argument("frame is not right-handed");
  }

  static Frame standard() {
    return Frame(make_vec3(1, 0, 0), make_vec3(0, 1, 0), make_vec3(0, 0, 1));
  }

  const Vec3& w(int k) const { return k == 1 ? w1 : (k == 2 ? w2 : w3); }
};

inline Polynomial3 linear_form(const Vec3& a) {
  Polynomial3 p;
  for (int k = 0; k < 3; ++k)
    p += Polynomial3::variable(k) * Polynomial3::constant(a(k));
  return p;
}

/// Coordinate fields of a frame:
///   pi_1 = {x.w1, (x.w2) w3}, pi_2 = {x.w2, (x.w3) w1}, pi_3 = {x.w3, (x.w1) w2}.
inline std::array<QuaternionPolyField, 3> coordinate_fields(const Frame& f) {
  const auto make = [](const Vec3& a, const Vec3& b, const Vec3& c) {
    QuaternionPolyField p{linear_form(a), linear_form(b) * c};
    if (!is_harmonic_field(p))
      throw std::logic_error("coordinate field is not harmonic");
    return p;
  };
  return {make(f.w1, f.w2, f.w3), make(f.w2, f.w3, f.w1), make(f.w3, f.w1, f.w2)};
}

/// pi_1 = o3 pi_2 - o2 pi_3 with o_k = {0, w_k}, as an exact identity of
/// polynomial fields under the pointwise quaternion product.
inline bool verify_identity_27(const Frame& f) {
  const auto pi = coordinate_fields(f);
  const Quaternion o2{Rational(0), f.w2};
  const Quaternion o3{Rational(0), f.w3};
  return pi[0] == mul(o3, pi[1]) - mul(o2, pi[2]);
}

/// Linear field {x.a, Ax} that is harmonic: a = rot(Ax) and tr A = 0.
struct LinearHarmonicField {
  Vec3 a;
  Mat3 A;

  LinearHarmonicField(Vec3 vec, Mat3 mat) : a(std::move(vec)), A(std::move(mat)) {
    if (A(0, 0) + A(1, 1) + A(2, 2) != 0)
      throw std::invalid_argument("linear field: matrix must be trace-free");
    Vec3 curl;
    curl << A(2, 1) - A(1, 2), A(0, 2) - A(2, 0), A(1, 0) - A(0, 1);
    if (curl != a)
      throw std::invalid_argument("linear field: a must equal rot(Ax)");
  }

  QuaternionPolyField to_field() const {
    VectorPoly u{linear_form(A.row(0).transpose()), linear_form(A.row(1).transpose()),
                 linear_form(A.row(2).transpose())};
    return {linear_form(a), std::move(u)};
  }
};

inline LinearHarmonicField linear_from_field(const QuaternionPolyField& p) {
  Vec3 a;
  Mat3 A;
  for (int k = 0; k < 3; ++k) {
    Monomial m;
    m.e[static_cast<unsigned>(k)] = 1;
    a(k) = p.alpha.coefficient(m);
    for (int r = 0; r < 3; ++r) A(r, k) = p.u[r].coefficient(m);
  }
  LinearHarmonicField lin(a, A);
  if (lin.to_field() != p)
    throw std::invalid_argument("field is not linear");
  return lin;
}

/// Unique quaternion pair (g, h) with pi = g pi_2 + h pi_3 as an exact
/// field identity; solved on the 12 linear-field coefficients.
inline std::pair<Quaternion, Quaternion> expand_linear(const LinearHarmonicField& pi,
                                                       const Frame& f) {
  const auto cf = coordinate_fields(f);
  const auto coords_of = [](const QuaternionPolyField& p) {
    VecX x = VecX::Zero(12);
    for (int comp = 0; comp < 4; ++comp)
      for (int k = 0; k < 3; ++k) {
        Monomial m;
        m.e[static_cast<unsigned>(k)] = 1;
        x(comp * 3 + k) = p.component(comp).coefficient(m);
      }
    return x;
  };

  const std::array<Quaternion, 4> basis{Quaternion::one(), Quaternion::unit_i(),
                                        Quaternion::unit_j(), Quaternion::unit_k()};
  MatX a = MatX::Zero(12, 8);
  for (int j = 0; j < 4; ++j) {
    a.col(j) = coords_of(mul(basis[static_cast<size_t>(j)], cf[1]));
    a.col(4 + j) = coords_of(mul(basis[static_cast<size_t>(j)], cf[2]));
  }
  if (rank(a) != 8)
    throw std::logic_error("expand_linear: representation system is rank-deficient");
  const auto x = solve_particular(a, coords_of(pi.to_field()));
  if (!x) throw std::invalid_argument("expand_linear: field has no (pi_2, pi_3) expansion");

  const auto assemble = [&](int off) {
    Quaternion q;
    for (int j = 0; j < 4; ++j) q = q + (*x)(off + j) * basis[static_cast<size_t>(j)];
    return q;
  };
  return {assemble(0), assemble(4)};
}

/// Evaluation functional at a point of the closed unit ball.
class DiracFunctional {
 public:
  explicit DiracFunctional(Vec3 x0) : x0_(std::move(x0)) {
    if (x0_.squaredNorm() > 1)
      throw std::invalid_argument("dirac: point lies outside the closed unit ball");
  }

  const Vec3& point() const { return x0_; }

  Quaternion operator()(const QuaternionPolyField& p) const { return evaluate(p, x0_); }

 private:
  Vec3 x0_;
};

/// Values of a functional on the three coordinate fields of a frame. The
/// vector part of each value must lie along the matching frame axis
/// (the image of an axial algebra is the commutative subalgebra
/// {{a, b w} : a, b rational}).
struct FunctionalValues {
  Quaternion v1, v2, v3;

  FunctionalValues(Quaternion a, Quaternion b, Quaternion c, const Frame& f)
      : v1(std::move(a)), v2(std::move(b)), v3(std::move(c)) {
    const auto along = [](const Quaternion& q, const Vec3& w) {
      return q.v.cross(w) == Vec3::Zero();
    };
    if (!along(v1, f.w3) || !along(v2, f.w1) || !along(v3, f.w2))
      throw std::invalid_argument(
          "functional values: vector parts do not lie along the frame axes");
  }

  static FunctionalValues from_dirac(const DiracFunctional& mu, const Frame& f) {
    const auto pi = coordinate_fields(f);
    return FunctionalValues(mu(pi[0]), mu(pi[1]), mu(pi[2]), f);
  }
};

/// Reads off the point of an evaluation functional from its values on the
/// coordinate fields, after checking the consistency equations
/// a12 = b31, b12 = a23, b23 = a31 that follow from the field identity
/// pi_1 = o3 pi_2 - o2 pi_3. Throws if the values cannot come from any
/// multiplicative functional.
inline Vec3 reconstruct_point(const FunctionalValues& vals, const Frame& f) {
  const Rational a12 = vals.v1.s, b12 = vals.v1.v.dot(f.w3);
  const Rational a23 = vals.v2.s, b23 = vals.v2.v.dot(f.w1);
  const Rational a31 = vals.v3.s, b31 = vals.v3.v.dot(f.w2);
  if (a12 != b31 || b12 != a23 || b23 != a31)
    throw std::invalid_argument(
        "functional values violate the character consistency equations");
  return a12 * f.w1 + b12 * f.w2 + b23 * f.w3;
}

/// Compares func(pq) with func(p) func(q) for coaxial harmonic p, q.
inline bool multiplicativity_check(const DiracFunctional& func, const QuaternionPolyField& p,
                                   const QuaternionPolyField& q, const Axis& w) {
  return func(coaxial_mul(p, q, w)) == mul(func(p), func(q));
}

/// Generators of the axial algebra of w: the unit {1, 0} and the linear
/// field {x.eta, [x.(w ^ eta)] w / (w.w)}, the scale-invariant form of
/// {x.eta, [x.(omega ^ eta)] omega}. The order w ^ eta is forced by
/// harmonicity: grad of the conjugate must equal omega ^ grad(x.eta).
inline std::pair<QuaternionPolyField, QuaternionPolyField> generators(const Axis& w,
                                                                      const Axis& eta) {
  if (w.v.dot(eta.v) != 0)
    throw std::invalid_argument("generators: eta must be orthogonal to the axis");
  const QuaternionPolyField unit = QuaternionPolyField::constant(Quaternion::one());
  const Vec3 n = w.v.cross(eta.v);
  QuaternionPolyField gen{linear_form(eta.v),
                          (linear_form(n) * (Rational(1) / w.norm_sq())) * w.v};
  if (!is_harmonic_field(gen) || !is_axial(gen, w))
    throw std::logic_error("generators: generator field failed certification");
  return {unit, gen};
}

/// Left module action check: h p stays harmonic for harmonic p.
inline bool h_module_check(const Quaternion& h, const QuaternionPolyField& p) {
  if (!is_harmonic_field(p))
    throw std::invalid_argument("h_module_check: p is not harmonic");
  return is_harmonic_field(mul(h, p));
}

struct NonClosureWitness {
  QuaternionPolyField p, q, pq;
  Polynomial3 div_defect;       // div of the product's vector part
  VectorPoly gradient_defect;   // grad(alpha) - rot(u) of the product
};

/// The fixed witness that the harmonic fields are not closed under the
/// pointwise product: pi_1 pi_2 in the standard frame.
inline NonClosureWitness non_closure_witness() {
  const auto pi = coordinate_fields(Frame::standard());
  NonClosureWitness w;
  w.p = pi[0];
  w.q = pi[1];
  w.pq = mul(pi[0], pi[1]);
  w.div_defect = div(w.pq.u);
  w.gradient_defect = grad(w.pq.alpha) - rot(w.pq.u);
  if (is_harmonic_field(w.pq))
    throw std::logic_error("non_closure_witness: product is unexpectedly harmonic");
  return w;
}

/// Evidence that evaluation outside the ball cannot be continuous: powers
/// of the axial generator shifted to have sup-norm-bounded values on the
/// ball, evaluated at the outside point, grow geometrically.
struct GrowthRow {
  int power;
  double value_module;   // |gen^m (x0)|
  double ball_sup;       // sampled sup of |gen^m| over the ball
};

inline std::vector<GrowthRow> growth_demonstration(const Vec3& x0, int max_power = 8,
                                                   int sphere_points = 256) {
  // Pick an axis orthogonal to nothing in particular; the standard k-axis
  // generator {x1, x2 k} works for any outside point with x1^2 + x2^2 > 1,
  // so rotate the roles if needed by choosing the best coordinate pair.
  std::array<std::pair<Axis, Axis>, 3> choices{
      std::make_pair(Axis(make_vec3(0, 0, 1)), Axis(make_vec3(1, 0, 0))),
      std::make_pair(Axis(make_vec3(0, 1, 0)), Axis(make_vec3(0, 0, 1))),
      std::make_pair(Axis(make_vec3(1, 0, 0)), Axis(make_vec3(0, 1, 0)))};
  size_t best = 0;
  Rational best_val(-1);
  for (size_t i = 0; i < choices.size(); ++i) {
    const Vec3& w = choices[i].first.v;
    const Rational planar = x0.squaredNorm() - x0.dot(w) * x0.dot(w);
    if (planar > best_val) {
      best_val = planar;
      best = i;
    }
  }
  const auto [unit, gen] = generators(choices[best].first, choices[best].second);

  std::vector<GrowthRow> rows;
  QuaternionPolyField power = unit;
  const auto dirs = fibonacci_sphere(sphere_points);
  for (int m = 1; m <= max_power; ++m) {
    power = coaxial_mul(power, gen, choices[best].first);
    GrowthRow row;
    row.power = m;
    row.value_module = std::sqrt(to_double(module_sq(evaluate(power, x0))));
    row.ball_sup = 0;
    for (const auto& dv : dirs) {
      const double a = power.alpha.evaluate_double(dv);
      const double u1 = power.u.c1.evaluate_double(dv);
      const double u2 = power.u.c2.evaluate_double(dv);
      const double u3 = power.u.c3.evaluate_double(dv);
      row.ball_sup = std::max(row.ball_sup, std::sqrt(a * a + u1 * u1 + u2 * u2 + u3 * u3));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hqf
