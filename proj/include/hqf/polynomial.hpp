#pragma once

#include "hqf/rational.hpp"

#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace hqf {

/// Exponent triple of a monomial x1^e0 x2^e1 x3^e2.
struct Monomial {
  std::array<unsigned, 3> e{0, 0, 0};

  unsigned degree() const { return e[0] + e[1] + e[2]; }
};

inline bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

/// Graded lexicographic order: total degree first, then lex on exponents.
/// Fixes a deterministic term iteration order, which downstream kernel and
/// pivoting code relies on for reproducible bases.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;  // higher leading exponent sorts first within a degree
  }
};

/// Exact multivariate polynomial in x1, x2, x3 over the rationals.
/// Canonical form: no zero coefficients stored.
class Polynomial3 {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Polynomial3() = default;

  static Polynomial3 constant(Rational c) {
    Polynomial3 p;
    p.set_term(Monomial{}, std::move(c));
    return p;
  }

  /// x_{k+1} for k in {0,1,2}.
  static Polynomial3 variable(int k) {
    Monomial m;
    m.e[static_cast<unsigned>(k)] = 1;
    Polynomial3 p;
    p.set_term(m, Rational(1));
    return p;
  }

  static Polynomial3 term(const Monomial& m, Rational c) {
    Polynomial3 p;
    p.set_term(m, std::move(c));
    return p;
  }

  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  /// Total degree, or -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  bool is_homogeneous(int* degree_out = nullptr) const {
    if (terms_.empty()) {
      if (degree_out) *degree_out = -1;
      return true;
    }
    const unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    if (degree_out) *degree_out = static_cast<int>(d);
    return true;
  }

  void set_term(const Monomial& m, Rational c) {
    if (c == 0)
      terms_.erase(m);
    else
      terms_[m] = std::move(c);
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of the graded-lex-first term; 0 for the zero polynomial.
  Rational leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Polynomial3& operator+=(const Polynomial3& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial3& operator-=(const Polynomial3& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial3& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
  }

  Polynomial3 derivative(int var) const {
    Polynomial3 r;
    for (const auto& [m, c] : terms_) {
      const unsigned k = m.e[static_cast<unsigned>(var)];
      if (k == 0) continue;
      Monomial n = m;
      n.e[static_cast<unsigned>(var)] = k - 1;
      r.add_term(n, c * Rational(k));
    }
    return r;
  }

  /// Antiderivative in x3 vanishing at x3 = 0.
  Polynomial3 integrate_x3() const {
    Polynomial3 r;
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      n.e[2] = m.e[2] + 1;
      r.add_term(n, c / Rational(n.e[2]));
    }
    return r;
  }

  Polynomial3 substitute_x3_zero() const {
    Polynomial3 r;
    for (const auto& [m, c] : terms_)
      if (m.e[2] == 0) r.add_term(m, c);
    return r;
  }

  bool depends_only_on_x1_x2() const {
    for (const auto& [m, c] : terms_)
      if (m.e[2] != 0) return false;
    return true;
  }

  Polynomial3 homogeneous_component(unsigned degree) const {
    Polynomial3 r;
    for (const auto& [m, c] : terms_)
      if (m.degree() == degree) r.add_term(m, c);
    return r;
  }

  std::vector<unsigned> present_degrees() const {
    std::vector<unsigned> ds;
    for (const auto& [m, c] : terms_)
      if (ds.empty() || ds.back() != m.degree()) ds.push_back(m.degree());
    return ds;  // graded order makes this already sorted and unique
  }

  Rational evaluate(const Vec3& x) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int k = 0; k < 3; ++k)
        for (unsigned p = 0; p < m.e[static_cast<unsigned>(k)]; ++p) t *= x(k);
      acc += t;
    }
    return acc;
  }

  double evaluate_double(const std::array<double, 3>& x) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
      double t = to_double(c);
      for (int k = 0; k < 3; ++k)
        for (unsigned p = 0; p < m.e[static_cast<unsigned>(k)]; ++p)
          t *= x[static_cast<unsigned>(k)];
      acc += t;
    }
    return acc;
  }

  friend bool operator==(const Polynomial3& a, const Polynomial3& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial3& a, const Polynomial3& b) {
    return !(a == b);
  }

 private:
  TermMap terms_;
};

inline Polynomial3 operator+(Polynomial3 a, const Polynomial3& b) { return a += b; }
inline Polynomial3 operator-(Polynomial3 a, const Polynomial3& b) { return a -= b; }
inline Polynomial3 operator-(const Polynomial3& a) {
  Polynomial3 r;
  return r -= a;
}
inline Polynomial3 operator*(const Rational& c, Polynomial3 p) { return p *= c; }
inline Polynomial3 operator*(Polynomial3 p, const Rational& c) { return p *= c; }

inline Polynomial3 operator*(const Polynomial3& a, const Polynomial3& b) {
  Polynomial3 r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m;
      for (unsigned k = 0; k < 3; ++k) m.e[k] = ma.e[k] + mb.e[k];
      r.add_term(m, ca * cb);
    }
  return r;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial3& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (unsigned k = 0; k < 3; ++k)
      if (m.e[k] > 0) {
        os << "*x" << (k + 1);
        if (m.e[k] > 1) os << "^" << m.e[k];
      }
  }
  return os;
}

}  // namespace hqf
