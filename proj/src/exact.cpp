#include "lval/exact.hpp"

#include <stdexcept>

namespace lval {

Quad::Quad(const mpq_class& x, const mpq_class& y, long d) : x_(x), y_(y), d_(d) {
  if (d < 1) throw std::invalid_argument("quadratic discriminant must be positive");
  if (d == 1) {
    x_ += y_;
    y_ = 0;
  }
  normalize();
}

void Quad::normalize() {
  x_.canonicalize();
  y_.canonicalize();
}

long Quad::join(long a, long b) {
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  throw std::invalid_argument("mixed quadratic fields: " + std::to_string(a) + " vs " +
                              std::to_string(b));
}

bool Quad::is_integral_coords() const {
  return x_.get_den() == 1 && y_.get_den() == 1;
}

Quad Quad::conj() const {
  Quad r = *this;
  r.y_ = -r.y_;
  return r;
}

Quad Quad::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("division by zero in quadratic field");
  Quad r;
  r.d_ = d_;
  r.x_ = x_ / n;
  r.y_ = -y_ / n;
  r.normalize();
  return r;
}

Quad& Quad::operator+=(const Quad& o) {
  d_ = join(d_, o.d_);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  d_ = join(d_, o.d_);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  d_ = join(d_, o.d_);
  if (y_ == 0 && o.y_ == 0) {
    x_ *= o.x_;
    return *this;
  }
  mpq_class nx = x_ * o.x_ + d_ * y_ * o.y_;
  mpq_class ny = x_ * o.y_ + y_ * o.x_;
  x_ = nx;
  y_ = ny;
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  d_ = join(d_, o.d_);
  if (o.y_ == 0) {
    if (o.x_ == 0) throw std::domain_error("division by zero in quadratic field");
    x_ /= o.x_;
    y_ /= o.x_;
    return *this;
  }
  return *this *= o.inverse();
}

Real Quad::to_real(int sign) const {
  Real v = lval::to_real(x_);
  if (y_ != 0) {
    Real s = boost::multiprecision::sqrt(Real(d_));
    v += lval::to_real(y_) * s * sign;
  }
  return v;
}

std::string Quad::str() const {
  if (y_ == 0) return x_.get_str();
  std::string s = x_.get_str();
  s += y_ < 0 ? "-" : "+";
  mpq_class ay = abs(y_);
  s += ay.get_str() + "*sqrt(" + std::to_string(d_) + ")";
  return s;
}

Quad operator+(Quad a, const Quad& b) { return a += b; }
Quad operator-(Quad a, const Quad& b) { return a -= b; }
Quad operator*(Quad a, const Quad& b) { return a *= b; }
Quad operator/(Quad a, const Quad& b) { return a /= b; }
Quad operator-(const Quad& a) { return Quad(0) - a; }

Quad pow(const Quad& a, unsigned long e) {
  Quad result(1);
  Quad base = a;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void poly_trim(QPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

bool poly_equal(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string poly_str(const QPoly& a, const std::string& var) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + a[i].str() + ")";
    if (i > 0) s += "*" + var + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

bool is_squarefree(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace lval
