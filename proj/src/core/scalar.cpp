#include "core/scalar.hpp"

#include <map>
#include <sstream>

#include "core/errors.hpp"

namespace focal {

namespace {

// Dense polynomials over Q, constant term first, trailing zeros trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly scale(Poly p, const Rational& c) {
  for (auto& x : p) x *= c;
  trim(p);
  return p;
}

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly rem = a, quo;
  trim(rem);
  int db = degree(b);
  if (db < 0) fail(Errc::division_by_zero, "polynomial division by zero");
  Rational lead = b[db];
  while (degree(rem) >= db) {
    int k = degree(rem) - db;
    Rational c = rem[degree(rem)] / lead;
    if (static_cast<int>(quo.size()) <= k) quo.resize(k + 1);
    quo[k] = c;
    Poly shifted(k, Rational(0));
    shifted.insert(shifted.end(), b.begin(), b.end());
    rem = sub(rem, scale(shifted, c));
  }
  trim(quo);
  return {quo, rem};
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g.
std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) {
  Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    Poly u2 = sub(u0, mul(q, u1));
    Poly v2 = sub(v0, mul(q, v1));
    a = b;
    b = r;
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  return {a, u0, v0};
}

struct CycloContext {
  unsigned phi = 1;
  Poly modulus;               // Phi_n, monic, degree phi
  std::vector<Poly> powers;   // z^(phi+k) mod Phi_n for k = 0..phi-2
};

const CycloContext& context(unsigned n) {
  static std::map<unsigned, CycloContext> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CycloContext ctx;
  ctx.phi = euler_phi(n);
  ctx.modulus = cyclotomic_polynomial(n);
  // z^phi = -(lower terms); higher powers by repeated multiplication by z.
  Poly cur(ctx.modulus.begin(), ctx.modulus.end() - 1);
  for (auto& c : cur) c = -c;
  for (unsigned k = 0; k + 1 < ctx.phi; ++k) {
    ctx.powers.push_back(cur);
    Poly next(ctx.phi, Rational(0));
    for (unsigned i = 0; i < ctx.phi; ++i) {
      if (i + 1 < ctx.phi) next[i + 1] += (i < cur.size() ? cur[i] : Rational(0));
    }
    if (ctx.phi >= 1 && ctx.phi - 1 < cur.size() && !cur[ctx.phi - 1].is_zero()) {
      const Rational& top = cur[ctx.phi - 1];
      for (unsigned i = 0; i < ctx.phi; ++i)
        next[i] += top * (i < ctx.powers[0].size() ? ctx.powers[0][i] : Rational(0));
    }
    trim(next);
    cur = next;
  }
  return cache.emplace(n, std::move(ctx)).first->second;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  if (n == 0) fail(Errc::bad_order, "euler phi of 0");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n == 0) fail(Errc::bad_order, "cyclotomic polynomial of order 0");
  Poly num(n + 1, Rational(0));
  num[0] = Rational(-1);
  num[n] = Rational(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(num, cyclotomic_polynomial(d));
    if (!r.empty()) fail(Errc::internal, "cyclotomic division left a remainder");
    num = q;
  }
  cache[n] = num;
  return num;
}

FieldDescriptor FieldDescriptor::cyclotomic(unsigned n) {
  if (n == 0) fail(Errc::bad_order, "cyclotomic order must be positive");
  return {n <= 2 ? 1u : n};
}

Scalar Scalar::from_coords(unsigned order, std::vector<Rational> coords) {
  if (order == 0) fail(Errc::bad_order, "scalar order must be positive");
  unsigned phi = euler_phi(order);
  if (coords.size() > phi)
    fail(Errc::shape_mismatch, "too many coordinates for order " + std::to_string(order));
  coords.resize(phi, Rational(0));
  Scalar s(order, std::move(coords));
  s.canonicalize();
  return s;
}

Scalar Scalar::zeta(unsigned order) {
  if (order == 0) fail(Errc::bad_order, "zeta order must be positive");
  if (order == 1) return Scalar(1);
  if (order == 2) return Scalar(-1);
  std::vector<Rational> c(euler_phi(order), Rational(0));
  c[1] = Rational(1);
  return Scalar(order, std::move(c));
}

const Rational& Scalar::rational_value() const {
  if (order_ != 1) fail(Errc::order_mismatch, "scalar is not rational");
  return c_[0];
}

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

void Scalar::canonicalize() {
  if (order_ == 1) return;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return;
  c_.resize(1);
  order_ = 1;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {

// Common field for a binary operation; distinct non-rational orders clash.
unsigned common_order(const Scalar& a, const Scalar& b) {
  if (a.order() == b.order()) return a.order();
  if (a.order() == 1) return b.order();
  if (b.order() == 1) return a.order();
  fail(Errc::order_mismatch, "mixing cyclotomic orders " + std::to_string(a.order()) + " and " +
                                 std::to_string(b.order()));
}

// Coordinates of s in the power basis of zeta_order, zero padded.  Safe for
// collapsed rationals, whose stored coordinate vector has length one.
std::vector<Rational> coords_in(const Scalar& s, unsigned order) {
  std::vector<Rational> c(order == 1 ? 1 : euler_phi(order), Rational(0));
  for (size_t i = 0; i < s.coords().size(); ++i) c[i] = s.coords()[i];
  return c;
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  unsigned order = common_order(a, b);
  std::vector<Rational> c = coords_in(a, order);
  std::vector<Rational> d = coords_in(b, order);
  for (size_t i = 0; i < c.size(); ++i) c[i] += d[i];
  return Scalar::from_coords(order, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  unsigned order = common_order(a, b);
  if (order == 1) return Scalar(a.coords()[0] * b.coords()[0]);
  const CycloContext& ctx = context(order);
  unsigned phi = ctx.phi;
  std::vector<Rational> x = coords_in(a, order);
  std::vector<Rational> y = coords_in(b, order);
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (x[i].is_zero()) continue;
    for (unsigned j = 0; j < phi; ++j) conv[i + j] += x[i] * y[j];
  }
  std::vector<Rational> c(conv.begin(), conv.begin() + phi);
  for (unsigned k = phi; k < conv.size(); ++k) {
    if (conv[k].is_zero()) continue;
    const Poly& rep = ctx.powers[k - phi];
    for (size_t i = 0; i < rep.size(); ++i) c[i] += conv[k] * rep[i];
  }
  return Scalar::from_coords(order, std::move(c));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero scalar");
  if (order_ == 1) return Scalar(c_[0].inverse());
  const CycloContext& ctx = context(order_);
  Poly a(c_);
  auto [g, u, v] = xgcd(a, ctx.modulus);
  (void)v;
  if (degree(g) != 0) fail(Errc::internal, "cyclotomic inverse: gcd not constant");
  Poly inv = scale(u, g[0].inverse());
  auto [q, r] = divmod(inv, ctx.modulus);
  (void)q;
  std::vector<Rational> c(r);
  return Scalar::from_coords(order_, std::move(c));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  return a.c_ < b.c_;
}

std::string Scalar::str() const {
  if (order_ == 1) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational v = c_[i];
    if (!first) {
      os << (v.sign() < 0 ? "-" : "+");
      if (v.sign() < 0) v = -v;
    }
    if (i == 0) {
      os << v.str();
    } else {
      if (v != Rational(1) && v != Rational(-1)) {
        os << v.str() << "*";
      } else if (v == Rational(-1)) {
        os << "-";
      }
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace focal
