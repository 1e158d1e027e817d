#pragma once

#include <string>
#include <vector>

#include "core/rational.hpp"

namespace focal {

// Ground field of a problem: the rationals, or the cyclotomic extension
// Q(zeta_n).  Orders 1 and 2 both mean the rationals and normalize to 1.
struct FieldDescriptor {
  unsigned order = 1;

  static FieldDescriptor rationals() { return {1}; }
  static FieldDescriptor cyclotomic(unsigned n);

  bool is_rational() const { return order == 1; }
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

unsigned euler_phi(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, constant term first,
// monic of degree phi(n).
std::vector<Rational> cyclotomic_polynomial(unsigned n);

// Exact scalar: an element of Q(zeta_n) in the power basis
// 1, z, ..., z^(phi(n)-1) reduced mod Phi_n.  Canonical form: order 1 with a
// single coordinate whenever the value is rational, so equal values always
// have identical representations.  Arithmetic lifts rationals into the other
// operand's field; two distinct non-rational orders do not mix.
class Scalar {
 public:
  Scalar() : order_(1), c_{Rational(0)} {}
  Scalar(const Rational& r) : order_(1), c_{r} {}
  Scalar(long n) : order_(1), c_{Rational(n)} {}

  // Value with the given coordinates in the power basis of Q(zeta_n).
  static Scalar from_coords(unsigned order, std::vector<Rational> coords);
  static Scalar zeta(unsigned order);

  unsigned order() const { return order_; }
  bool is_rational() const { return order_ == 1; }
  const std::vector<Rational>& coords() const { return c_; }
  const Rational& rational_value() const;

  bool is_zero() const;
  bool is_one() const { return order_ == 1 && c_[0].is_one(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b);

  // Compact human-readable form, e.g. "2/3" or "1-z^2".
  std::string str() const;

 private:
  Scalar(unsigned order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
  void canonicalize();

  unsigned order_;
  std::vector<Rational> c_;
};

}  // namespace focal
