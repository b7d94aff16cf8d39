#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lval/numeric.hpp"

namespace lval {

// x + y*sqrt(d) with rational x, y and squarefree d >= 1; d == 1 means y == 0.
// Values tagged d == 1 combine with any field; two different d > 1 are rejected.
class Quad {
 public:
  Quad() : x_(0), y_(0), d_(1) {}
  Quad(long v) : x_(v), y_(0), d_(1) {}  // NOLINT
  Quad(const mpz_class& v) : x_(v), y_(0), d_(1) {}  // NOLINT
  Quad(const mpq_class& v) : x_(v), y_(0), d_(1) {}  // NOLINT
  Quad(const mpq_class& x, const mpq_class& y, long d);

  const mpq_class& x() const { return x_; }
  const mpq_class& y() const { return y_; }
  long disc() const { return d_; }
  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_integral_coords() const;

  Quad conj() const;  // sqrt(d) -> -sqrt(d)
  mpq_class norm() const { return x_ * x_ - d_ * y_ * y_; }
  mpq_class trace() const { return 2 * x_; }
  Quad inverse() const;

  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  // Value under the embedding sqrt(d) -> sign*|sqrt(d)|, at current precision.
  Real to_real(int sign = 1) const;
  std::string str() const;

  friend bool operator==(const Quad& a, const Quad& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }

 private:
  static long join(long a, long b);
  void normalize();

  mpq_class x_;
  mpq_class y_;
  long d_;
};

Quad operator+(Quad a, const Quad& b);
Quad operator-(Quad a, const Quad& b);
Quad operator*(Quad a, const Quad& b);
Quad operator/(Quad a, const Quad& b);
Quad operator-(const Quad& a);
Quad pow(const Quad& a, unsigned long e);

// Dense polynomial with Quad coefficients, ascending powers.
using QPoly = std::vector<Quad>;

QPoly poly_mul(const QPoly& a, const QPoly& b);
void poly_trim(QPoly& a);
bool poly_equal(QPoly a, QPoly b);
std::string poly_str(const QPoly& a, const std::string& var = "T");

Real to_real(const mpq_class& q);
Real to_real(const mpz_class& z);

bool is_squarefree(long d);

}  // namespace lval
