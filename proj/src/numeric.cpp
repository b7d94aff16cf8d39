#include "lval/numeric.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lval {

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

unsigned digits_for_bits(long bits) {
  if (bits < 64) bits = 64;
  return static_cast<unsigned>(std::ceil(static_cast<double>(bits) * 0.30103)) + 1;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& r) {
  re *= r;
  im *= r;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(Complex a, const Real& r) { return a *= r; }
Complex operator*(const Real& r, Complex a) { return a *= r; }
Complex operator/(Complex a, const Real& r) {
  a.re /= r;
  a.im /= r;
  return a;
}
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real abs2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) {
  return Complex(boost::multiprecision::log(abs(z)), boost::multiprecision::atan2(z.im, z.re));
}

Complex pow(const Complex& z, long n) {
  Complex base = z;
  Complex result(Real(1));
  bool inv = n < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return inv ? Complex(Real(1)) / result : result;
}

Complex rpow(const Real& x, const Complex& z) {
  return exp(z * boost::multiprecision::log(x));
}

Complex sqrt(const Complex& z) {
  Real r = abs(z);
  Real a = boost::multiprecision::sqrt((r + boost::multiprecision::abs(z.re)) / 2);
  if (a == 0) return Complex();
  if (z.re >= 0) return Complex(a, z.im / (2 * a));
  Real b = z.im >= 0 ? a : Real(-a);
  return Complex(z.im / (2 * b), b);
}

Real pi() { return boost::math::constants::pi<Real>(); }

Complex two_pi_i() { return Complex(Real(0), 2 * pi()); }

namespace {

std::mutex bernoulli_mutex;
std::vector<mpq_class> bernoulli_cache;

const mpq_class& bernoulli_exact(std::size_t n) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  if (bernoulli_cache.empty()) bernoulli_cache.emplace_back(1);
  while (bernoulli_cache.size() <= n) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    std::size_t m = bernoulli_cache.size();
    mpq_class acc = 0;
    mpz_class binom = 1;
    for (std::size_t k = 0; k < m; ++k) {
      acc += binom * bernoulli_cache[k];
      binom = binom * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    mpq_class b = -acc / mpq_class(binom);
    b.canonicalize();
    bernoulli_cache.push_back(b);
  }
  return bernoulli_cache[n];
}

Real to_real(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// B_{2j} / ((2j)(2j-1)) at the current precision, cached per precision.
const Real& stirling_coefficient(std::size_t j) {
  thread_local std::map<unsigned, std::vector<Real>> cache;
  auto& v = cache[Real::default_precision()];
  while (v.size() <= j) {
    std::size_t i = v.size();
    if (i == 0) {
      v.emplace_back(0);
      continue;
    }
    v.push_back(to_real(bernoulli_exact(2 * i)) / Real(static_cast<double>((2 * i) * (2 * i - 1))));
  }
  return v[j];
}

double stirling_radius(long bits) { return 0.12 * static_cast<double>(bits) + 6.0; }

long current_bits() {
  return static_cast<long>(std::ceil(static_cast<double>(Real::default_precision()) * 3.3219281));
}

// Stirling series for log Gamma at |w| large, Re w > 0.
Complex stirling(const Complex& w, long bits) {
  Complex lw = log(w);
  Complex result = (w - Complex(Real(0.5))) * lw - w + Complex(boost::multiprecision::log(2 * pi()) / 2);
  Complex winv = Complex(Real(1)) / w;
  Complex w2inv = winv * winv;
  Complex power = winv;
  // Term count from |B_2j| ~ 2 (2j)! / (2 pi)^{2j}, all in double.
  double lwabs = std::log(std::hypot(static_cast<double>(w.re), static_cast<double>(w.im)));
  double lscale = std::log(std::max(1.0, std::fabs(static_cast<double>(result.re)) +
                                             std::fabs(static_cast<double>(result.im))));
  double ltarget = -(static_cast<double>(bits) + 10) * std::log(2.0) + lscale;
  std::size_t J = 1;
  for (; J < 2000; ++J) {
    double j2 = 2.0 * static_cast<double>(J);
    double lt = std::log(2.0) + std::lgamma(j2 + 1) - j2 * std::log(2 * M_PI) - std::log(j2 * (j2 - 1)) -
                (j2 - 1) * lwabs;
    if (lt < ltarget) break;
  }
  if (J == 2000) throw std::runtime_error("stirling series did not converge");
  for (std::size_t j = 1; j <= J; ++j) {
    result += power * stirling_coefficient(j);
    if (j < J) power *= w2inv;
  }
  return result;
}

}  // namespace

Real bernoulli(std::size_t n) { return to_real(bernoulli_exact(n)); }

Complex lgamma(const Complex& z) {
  long bits = current_bits();
  double radius = stirling_radius(bits);
  if (z.re <= 0) throw std::domain_error("lgamma requires Re z > 0");
  double zr = static_cast<double>(z.re);
  double zi = static_cast<double>(z.im);
  long shift = 0;
  if (std::hypot(zr, zi) < radius && std::fabs(zi) < radius) {
    shift = static_cast<long>(std::ceil(std::sqrt(radius * radius - zi * zi) - zr));
    if (shift < 0) shift = 0;
  }
  Complex w = z + Complex(Real(shift));
  Complex result = stirling(w, bits);
  for (long j = 0; j < shift; ++j) result -= log(z + Complex(Real(j)));
  return result;
}

Complex gamma(const Complex& z) {
  long bits = current_bits();
  double radius = stirling_radius(bits);
  double zr = static_cast<double>(z.re);
  double zi = static_cast<double>(z.im);
  long shift = 0;
  if (std::hypot(zr, zi) < radius || zr < 1) {
    double need = std::fabs(zi) < radius ? std::sqrt(radius * radius - zi * zi) : 1.0;
    shift = static_cast<long>(std::ceil(need - zr));
    if (shift < 0) shift = 0;
  }
  Complex w = z + Complex(Real(shift));
  Complex value = exp(stirling(w, bits));
  if (shift > 0) {
    Complex prod(Real(1));
    for (long j = 0; j < shift; ++j) prod *= z + Complex(Real(j));
    if (prod.re == 0 && prod.im == 0) throw std::domain_error("gamma pole");
    value /= prod;
  }
  return value;
}

std::string to_decimal(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

std::string to_decimal(const Complex& z, int digits) {
  std::string s = to_decimal(z.re, digits);
  if (z.im != 0) {
    s += z.im < 0 ? "-" : "+";
    s += to_decimal(boost::multiprecision::abs(z.im), digits) + "i";
  }
  return s;
}

Real parse_real(const std::string& s) { return Real(s); }

std::complex<double> lgamma_d(std::complex<double> z) {
  const double radius = 16.0;
  std::complex<double> acc(0, 0);
  while (std::abs(z) < radius || z.real() < 1) {
    acc -= std::log(z);
    z += 1.0;
  }
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
  std::complex<double> r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2 * M_PI);
  std::complex<double> zi = 1.0 / z;
  std::complex<double> p = zi;
  for (int j = 1; j <= 7; ++j) {
    r += b[j - 1] / (2.0 * j * (2.0 * j - 1)) * p;
    p *= zi * zi;
  }
  return r + acc;
}

double log_abs_gamma_d(double x, double y) { return lgamma_d({x, y}).real(); }

}  // namespace lval
