#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>
#include <vector>

namespace lval {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the default decimal precision for new Real values; restores on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

unsigned current_digits();
// Digits10 needed for the given number of bits.
unsigned digits_for_bits(long bits);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  explicit Complex(double r, double i = 0) : re(r), im(i) {}

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& r);
Complex operator*(const Real& r, Complex a);
Complex operator/(Complex a, const Real& r);
Complex operator-(const Complex& a);

Real abs(const Complex& z);
Real abs2(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex pow(const Complex& z, long n);
// x^z for real x > 0.
Complex rpow(const Real& x, const Complex& z);
Complex sqrt(const Complex& z);

Real pi();
Complex two_pi_i();

// Gamma(z) for z away from the non-positive integers.
Complex gamma(const Complex& z);
// log Gamma(z) with branch continuous from the positive real axis (Re z > 0).
Complex lgamma(const Complex& z);

// Bernoulli number B_n at the current precision (exact rationals are cached).
Real bernoulli(std::size_t n);

// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& x, int digits);
std::string to_decimal(const Complex& z, int digits);
Real parse_real(const std::string& s);

// Double precision helpers used for planning and error estimation.
std::complex<double> lgamma_d(std::complex<double> z);
double log_abs_gamma_d(double x, double y);

}  // namespace lval
