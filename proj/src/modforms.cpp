#include "lval/modforms.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lval::modforms {

QExpansion::QExpansion(int weight, std::vector<Quad> coeffs)
    : weight_(weight), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("empty q-expansion");
}

const Quad& QExpansion::operator[](std::size_t n) const {
  if (n >= coeffs_.size())
    throw std::out_of_range("q-expansion coefficient " + std::to_string(n) +
                            " beyond truncation " + std::to_string(truncation()));
  return coeffs_[n];
}

long QExpansion::disc() const {
  for (const auto& c : coeffs_)
    if (c.disc() != 1) return c.disc();
  return 1;
}

QExpansion QExpansion::truncated(std::size_t n) const {
  if (n > truncation()) throw std::out_of_range("cannot extend a truncated q-expansion");
  return QExpansion(weight_, std::vector<Quad>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

QExpansion QExpansion::scaled(const Quad& c) const {
  std::vector<Quad> r = coeffs_;
  for (auto& v : r) v *= c;
  return QExpansion(weight_, std::move(r));
}

QExpansion QExpansion::conj() const {
  std::vector<Quad> r = coeffs_;
  for (auto& v : r) v = v.conj();
  return QExpansion(weight_, std::move(r));
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  if (a.weight_ != b.weight_) throw std::invalid_argument("adding forms of different weight");
  std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Quad> r(n + 1);
  for (std::size_t i = 0; i <= n; ++i) r[i] = a.coeffs_[i] + b.coeffs_[i];
  return QExpansion(a.weight_, std::move(r));
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
  return a + b.scaled(Quad(-1));
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Quad> r(n + 1);
  auto integral = [n](const std::vector<Quad>& c) {
    for (std::size_t i = 0; i <= n; ++i)
      if (!c[i].is_rational() || c[i].x().get_den() != 1) return false;
    return true;
  };
  if (integral(a.coeffs_) && integral(b.coeffs_)) {
    std::vector<mpz_class> x(n + 1), y(n + 1), z(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      x[i] = a.coeffs_[i].x().get_num();
      y[i] = b.coeffs_[i].x().get_num();
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j)
        mpz_addmul(z[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    for (std::size_t i = 0; i <= n; ++i) r[i] = Quad(z[i]);
    return QExpansion(a.weight_ + b.weight_, std::move(r));
  }
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QExpansion(a.weight_ + b.weight_, std::move(r));
}

bool operator==(const QExpansion& a, const QExpansion& b) {
  return a.weight_ == b.weight_ && a.coeffs_ == b.coeffs_;
}

Newform Newform::conj() const {
  Newform g = *this;
  g.qexp = qexp.conj();
  if (!label.empty()) {
    char last = label.back();
    if (last == 'a')
      g.label.back() = 'b';
    else if (last == 'b')
      g.label.back() = 'a';
  }
  return g;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
  for (long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

namespace {

mpz_class divisor_power_sum(long n, unsigned long k) {
  mpz_class s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k);
    s += t;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), k);
      s += t;
    }
  }
  return s;
}

QExpansion power(const QExpansion& f, int e, std::size_t nterms, int unit_weight) {
  std::vector<Quad> one(nterms + 1);
  one[0] = Quad(1);
  QExpansion r(0, one);
  for (int i = 0; i < e; ++i) r = r * f;
  (void)unit_weight;
  return r;
}

}  // namespace

QExpansion eisenstein_qexp(int k, std::size_t nterms) {
  long c;
  if (k == 4)
    c = 240;
  else if (k == 6)
    c = -504;
  else
    throw std::invalid_argument("eisenstein_qexp supports k = 4 or 6 only");
  std::vector<Quad> a(nterms + 1);
  a[0] = Quad(1);
  for (std::size_t n = 1; n <= nterms; ++n)
    a[n] = Quad(mpz_class(c * divisor_power_sum(static_cast<long>(n), static_cast<unsigned long>(k - 1))));
  return QExpansion(k, std::move(a));
}

QExpansion delta_qexp(std::size_t nterms) {
  QExpansion e4 = eisenstein_qexp(4, nterms);
  QExpansion e6 = eisenstein_qexp(6, nterms);
  QExpansion d = (e4 * e4 * e4 - e6 * e6).scaled(Quad(mpq_class(1, 1728)));
  for (const auto& c : d.coeffs())
    if (!c.is_integral_coords()) throw std::logic_error("Delta has non-integral coefficient");
  return d;
}

int cusp_dimension(int kappa) {
  if (kappa < 12 || kappa % 2) return 0;
  int d = kappa / 12;
  if (kappa % 12 == 2) return d - 1;
  return d;
}

std::vector<QExpansion> cusp_basis(int kappa, std::size_t nterms) {
  int dim = cusp_dimension(kappa);
  if (dim == 0) throw std::invalid_argument("S_" + std::to_string(kappa) + " is zero");
  QExpansion delta = delta_qexp(nterms);
  QExpansion e4 = eisenstein_qexp(4, nterms);
  QExpansion e6 = eisenstein_qexp(6, nterms);
  std::vector<QExpansion> basis;
  for (int a = 1; 12 * a <= kappa; ++a) {
    int rest = kappa - 12 * a;
    int c = (rest % 4 == 0) ? 0 : 1;
    if ((rest - 6 * c) < 0 || (rest - 6 * c) % 4) continue;
    int b = (rest - 6 * c) / 4;
    QExpansion m = power(delta, a, nterms, 12) * power(e4, b, nterms, 4) * power(e6, c, nterms, 6);
    basis.emplace_back(kappa, m.coeffs());
  }
  if (static_cast<int>(basis.size()) != dim) throw std::logic_error("cusp basis size mismatch");
  return basis;
}

IntMatrix hecke_matrix(const std::vector<QExpansion>& basis, long p) {
  if (!is_prime(p)) throw std::invalid_argument("Hecke operator needs a prime");
  std::size_t dim = basis.size();
  int kappa = basis.front().weight();
  for (const auto& b : basis)
    if (b.truncation() < static_cast<std::size_t>(p) * dim)
      throw std::out_of_range("insufficient truncation for T_" + std::to_string(p) + ": need " +
                              std::to_string(p * dim) + " terms");
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(kappa - 1));
  IntMatrix m(dim, std::vector<mpz_class>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Quad> r(dim + 1);
    for (std::size_t n = 1; n <= dim; ++n) {
      r[n] = basis[j][static_cast<std::size_t>(p) * n];
      if (n % static_cast<std::size_t>(p) == 0) r[n] += Quad(pk) * basis[j][n / p];
    }
    for (std::size_t i = 0; i < dim; ++i) {
      Quad c = r[i + 1];
      if (!c.is_rational() || c.x().get_den() != 1)
        throw std::logic_error("non-integral Hecke matrix entry");
      m[i][j] = c.x().get_num();
      for (std::size_t n = 1; n <= dim; ++n) r[n] -= c * basis[i][n];
    }
  }
  return m;
}

IntMatrix hecke_operator_matrix(int kappa, long p, std::size_t basis_size) {
  if (static_cast<int>(basis_size) != cusp_dimension(kappa))
    throw std::invalid_argument("basis size does not match dim S_k");
  return hecke_matrix(cusp_basis(kappa, static_cast<std::size_t>(p) * basis_size), p);
}

Newform level_one_eigenform(int kappa, std::size_t nterms) {
  if (cusp_dimension(kappa) != 1)
    throw std::invalid_argument("dim S_" + std::to_string(kappa) + " is not 1");
  Newform f;
  f.weight = kappa;
  f.label = std::to_string(kappa);
  f.qexp = cusp_basis(kappa, nterms).front();
  return f;
}

std::pair<Newform, Newform> eigenform_pair_weight24(std::size_t nterms) {
  if (nterms < 4) throw std::invalid_argument("need at least 4 terms");
  std::vector<QExpansion> basis = cusp_basis(24, std::max<std::size_t>(nterms, 4));
  IntMatrix m = hecke_matrix(basis, 2);
  mpz_class tr = m[0][0] + m[1][1];
  mpz_class det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  mpz_class disc = tr * tr - 4 * det;
  // disc = s^2 D with D squarefree
  mpz_class s = 1, rest = disc;
  for (mpz_class q = 2; q * q <= rest; ++q) {
    while (rest % (q * q) == 0) {
      rest /= q * q;
      s *= q;
    }
  }
  long d = rest.get_si();
  Quad lambda(mpq_class(tr, 2), mpq_class(s, 2), d);
  // (M - lambda) v = 0 using the first row; a_1 fixes v_0 = 1.
  Quad v1 = (lambda - Quad(m[0][0])) / Quad(m[0][1]);
  QExpansion g = basis[0] + basis[1].scaled(v1);
  Newform f;
  f.weight = 24;
  f.hecke_field_disc = d;
  f.label = "24a";
  f.qexp = g;
  return {f, f.conj()};
}

SatakeData satake(const Newform& f, long p, int sign) {
  if (!is_prime(p)) throw std::invalid_argument("satake needs a prime");
  if (static_cast<std::size_t>(p) > f.truncation()) throw std::out_of_range("p beyond truncation");
  SatakeData s;
  s.p = p;
  s.a_p = f.a(static_cast<std::size_t>(p));
  mpz_ui_pow_ui(s.det.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f.weight - 1));
  Real a = s.a_p.to_real(sign);
  Real det = to_real(s.det);
  Real disc = a * a - 4 * det;
  if (disc <= 0) {
    Real r = boost::multiprecision::sqrt(-disc) / 2;
    s.alpha = Complex(a / 2, r);
    s.beta = Complex(a / 2, -r);
  } else {
    Real r = boost::multiprecision::sqrt(disc) / 2;
    s.alpha = Complex(a / 2 + r);
    s.beta = Complex(a / 2 - r);
  }
  return s;
}

namespace {

struct GLRule {
  std::vector<Real> nodes;    // on [-1,1]
  std::vector<Real> weights;
};

std::mutex gl_mutex;
std::map<std::pair<int, unsigned>, GLRule> gl_cache;

const GLRule& gauss_legendre(int n) {
  std::lock_guard<std::mutex> lock(gl_mutex);
  auto key = std::make_pair(n, current_digits());
  auto it = gl_cache.find(key);
  if (it != gl_cache.end()) return it->second;
  GLRule rule;
  Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(current_digits()) + 3);
  Real pival = pi();
  for (int i = 1; i <= n; ++i) {
    Real x = boost::multiprecision::cos(pival * (Real(i) - Real(0.25)) / (Real(n) + Real(0.5)));
    Real dp;
    for (int iter = 0; iter < 100; ++iter) {
      Real p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (boost::multiprecision::abs(dx) < eps) {
        if (iter > 0) break;
      }
    }
    Real p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return gl_cache.emplace(key, std::move(rule)).first->second;
}

// Integral_Y^inf y^m e^{-beta y} dy for integer m >= 0.
Real upper_gamma_integral(int m, const Real& beta, const Real& y0) {
  Real sum = 0;
  Real term = 1;  // m!/j! * y0^j / beta^(m-j+1), built from j = m downward
  Real fact = 1;
  for (int j = m; j >= 0; --j) {
    term = fact * boost::multiprecision::pow(y0, j) / boost::multiprecision::pow(beta, m - j + 1);
    sum += term;
    fact *= j;
  }
  return boost::multiprecision::exp(-beta * y0) * sum;
}

}  // namespace

std::size_t petersson_terms_needed(int kappa, int digits) {
  double target = (digits + 15) * std::log(10.0);
  double r = 2 * M_PI * std::sqrt(3.0) / 2;
  for (std::size_t m = 1;; ++m) {
    double lt = (kappa / 2.0 + 0.5) * std::log(static_cast<double>(m)) - r * static_cast<double>(m);
    if (lt < -target && m > 3) return m;
  }
}

PeterssonResult petersson_norm(const Newform& f, int digits, int sign) {
  const int work = digits + 10;
  PrecisionScope scope(static_cast<unsigned>(work + 5));
  std::size_t terms = petersson_terms_needed(f.weight, digits);
  if (f.truncation() < terms)
    throw std::runtime_error("petersson_norm needs " + std::to_string(terms) + " coefficients, have " +
                             std::to_string(f.truncation()));
  std::vector<Real> a(terms + 1);
  for (std::size_t n = 1; n <= terms; ++n) a[n] = f.a(n).to_real(sign);
  const int m = f.weight - 2;
  const Real four_pi = 4 * pi();
  const Real ytop = 2;

  Real upper = 0;
  for (std::size_t n = 1; n <= terms; ++n) {
    if (a[n] == 0) continue;
    upper += a[n] * a[n] * upper_gamma_integral(m, four_pi * n, ytop);
  }

  auto lower_with = [&](int nodes) {
    const GLRule& rule = gauss_legendre(nodes);
    Real total = 0;
    const Real two_pi = 2 * pi();
    for (int i = 0; i < nodes; ++i) {
      Real x = (rule.nodes[i] + 1) / 4;  // [0, 1/2]
      Real wx = rule.weights[i] / 4;
      Real ylow = boost::multiprecision::sqrt(1 - x * x);
      Real half = (ytop - ylow) / 2;
      Real c = boost::multiprecision::cos(two_pi * x);
      Real s = boost::multiprecision::sin(two_pi * x);
      Real inner = 0;
      for (int j = 0; j < nodes; ++j) {
        Real y = ylow + half * (rule.nodes[j] + 1);
        Real r = boost::multiprecision::exp(-two_pi * y);
        Complex q(r * c, r * s);
        Complex acc(a[terms]);
        for (std::size_t n = terms - 1; n >= 1; --n) {
          acc *= q;
          acc.re += a[n];
        }
        acc *= q;
        inner += rule.weights[j] * abs2(acc) * boost::multiprecision::pow(y, m);
      }
      total += wx * half * inner;
    }
    return 2 * total;
  };

  Real tol = boost::multiprecision::pow(Real(10), -(digits + 5));
  int nodes = 24;
  Real prev = lower_with(nodes);
  Real diff;
  Real cur;
  for (;;) {
    nodes *= 2;
    cur = lower_with(nodes);
    diff = boost::multiprecision::abs(cur - prev);
    if (diff <= tol * boost::multiprecision::abs(cur + upper) || nodes >= 384) break;
    prev = cur;
  }
  PeterssonResult res;
  res.unnormalized = cur + upper;
  Real vol = pi() / 3;
  res.value = res.unnormalized / vol;
  Real tail_terms = boost::multiprecision::pow(Real(10), -(digits + 12)) * res.unnormalized;
  res.error_bound = (diff + tail_terms) / vol;
  res.nodes = nodes;
  res.terms_used = terms;
  if (res.error_bound > boost::multiprecision::pow(Real(10), -digits) * res.value)
    throw std::runtime_error("petersson_norm did not converge; achieved bound " +
                             to_decimal(res.error_bound, 5));
  return res;
}

}  // namespace lval::modforms
