#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace hqf {

/// Exact arbitrary-precision rational scalar. All algebraic identities in
/// this library are checked as exact equalities over this type.
using Rational = mpq_class;

using Vec3 = Eigen::Matrix<Rational, 3, 1>;
using Mat3 = Eigen::Matrix<Rational, 3, 3>;
using MatX = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Parses "num", "-num" or "num/den". Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Vec3 make_vec3(long a, long b, long c) {
  Vec3 v;
  v << Rational(a), Rational(b), Rational(c);
  return v;
}

}  // namespace hqf
