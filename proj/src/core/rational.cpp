#include "core/rational.hpp"

#include <ostream>

#include "core/errors.hpp"

namespace focal {

Rational::Rational(long n, long d) {
  if (d == 0) fail(Errc::division_by_zero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail(Errc::invalid_document, "empty rational literal");
  for (char c : text) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      fail(Errc::invalid_document, "bad character in rational literal '" + text + "'");
  }
  mpq_class v;
  if (v.set_str(text, 10) != 0)
    fail(Errc::invalid_document, "unparsable rational literal '" + text + "'");
  if (v.get_den() == 0) fail(Errc::division_by_zero, "rational literal '" + text + "' has zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::division_by_zero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::string Rational::str() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace focal
