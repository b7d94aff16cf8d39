#include "lval/recognize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "lval/exact.hpp"

namespace lval::recognize {

namespace bmp = boost::multiprecision;

Real Recognition::value() const {
  Real v = to_real(x);
  if (y != 0) v += to_real(y) * bmp::sqrt(Real(disc));
  return v;
}

std::string Recognition::str() const {
  switch (kind) {
    case Kind::unrecognized:
      return "unrecognized";
    case Kind::rational:
      return x.get_str();
    case Kind::quadratic:
      if (y == 0) return x.get_str();
      return x.get_str() + (y < 0 ? " - " : " + ") + mpq_class(abs(y)).get_str() + "*sqrt(" + std::to_string(disc) +
             ")";
  }
  return "";
}

bool operator==(const Recognition& a, const Recognition& b) {
  return a.kind == b.kind && a.x == b.x && a.y == b.y && a.disc == b.disc && a.residual == b.residual &&
         a.gap == b.gap && a.height == b.height;
}

namespace {

mpz_class floor_z(const Real& x) {
  Real f = bmp::floor(x);
  mpz_class r;
  mpfr_get_z(r.get_mpz_t(), f.backend().data(), MPFR_RNDD);
  return r;
}

mpz_class round_z(const Real& x) { return floor_z(x + Real(0.5)); }

Real to_r(const mpz_class& z) { return to_real(z); }

}  // namespace

Recognition recognize_rational(const Complex& z, const mpz_class& max_height, const Real& tol, double gap_orders) {
  Recognition r;
  r.residual = std::numeric_limits<double>::infinity();
  r.gap = 0;
  if (bmp::abs(z.im) >= tol) {
    r.residual = bmp::abs(z.im);
    return r;
  }
  Real factor = bmp::pow(Real(10), Real(-gap_orders));
  Real x = z.re;
  mpz_class p0 = 1, q0 = 0, p1 = floor_z(x), q1 = 1;
  Real frac = x - to_r(p1);
  for (int iter = 0; iter < 10000; ++iter) {
    mpz_class h = std::max<mpz_class>(mpz_class(abs(p1)), q1);
    if (h > max_height) break;
    Real res = abs(z - Complex(to_real(mpq_class(p1, q1))));
    Real gap = Real(1) / (to_r(q1) * to_r(max_height));
    if (res < factor * gap) {
      r.x = mpq_class(p1, q1);
      r.x.canonicalize();
      r.y = 0;
      r.residual = res;
      r.gap = gap;
      r.height = h;
      if (res < tol) r.kind = Kind::rational;
      return r;
    }
    if (frac == 0) break;
    x = Real(1) / frac;
    mpz_class a = floor_z(x);
    frac = x - to_r(a);
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return r;
}

namespace {

using Vec = std::array<mpz_class, 4>;

// LLL with delta = 3/4 and exact rational Gram-Schmidt.
void lll(std::vector<Vec>& b) {
  const std::size_t n = b.size();
  const mpq_class delta(3, 4);
  auto gram_schmidt = [&](std::vector<std::array<mpq_class, 4>>& bs, std::vector<std::vector<mpq_class>>& mu,
                          std::vector<mpq_class>& B) {
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c < 4; ++c) bs[i][c] = b[i][c];
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class num = 0;
        for (int c = 0; c < 4; ++c) num += mpq_class(b[i][c]) * bs[j][c];
        mu[i][j] = num / B[j];
        for (int c = 0; c < 4; ++c) bs[i][c] -= mu[i][j] * bs[j][c];
      }
      B[i] = 0;
      for (int c = 0; c < 4; ++c) B[i] += bs[i][c] * bs[i][c];
    }
  };
  std::vector<std::array<mpq_class, 4>> bs(n);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> B(n);
  gram_schmidt(bs, mu, B);
  std::size_t k = 1;
  for (int guard = 0; k < n && guard < 100000; ++guard) {
    for (std::size_t jj = k; jj-- > 0;) {
      mpq_class m = mu[k][jj];
      mpz_class r = m.get_num() * 2 + m.get_den();
      mpz_fdiv_q(r.get_mpz_t(), r.get_mpz_t(), mpz_class(2 * m.get_den()).get_mpz_t());
      if (r != 0) {
        for (int c = 0; c < 4; ++c) b[k][c] -= r * b[jj][c];
        gram_schmidt(bs, mu, B);
      }
    }
    if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(bs, mu, B);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// One lattice reduction at scale S.
Recognition quadratic_at_scale(const Complex& z, long D, const mpz_class& coeff_bound, const Real& tol,
                               const Real& factor, const Real& S) {
  Recognition r;
  r.disc = D;
  r.residual = std::numeric_limits<double>::infinity();
  r.gap = 0;
  Real sd = bmp::sqrt(Real(D));
  std::vector<Vec> b(3);
  b[0] = {mpz_class(1), 0, 0, round_z(S)};
  b[1] = {mpz_class(0), 1, 0, round_z(S * sd)};
  b[2] = {mpz_class(0), 0, 1, round_z(-S * z.re)};
  lll(b);
  // Candidate from the shortest vector with c != 0; the gap is its residual scaled by the length
  // ratio to the next reduced vector, so residual < 10^-k gap means the relation is 10^k shorter.
  auto norm = [](const Vec& v) {
    Real s2 = 0;
    for (const auto& c : v) s2 += to_real(mpz_class(c * c));
    return bmp::sqrt(s2);
  };
  std::sort(b.begin(), b.end(), [&](const Vec& u, const Vec& w) { return norm(u) < norm(w); });
  std::size_t best = b.size();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i][2] != 0) {
      best = i;
      break;
    }
  if (best == b.size()) return r;
  mpz_class a = b[best][0], bb = b[best][1], c = b[best][2];
  if (c < 0) {
    a = -a;
    bb = -bb;
    c = -c;
  }
  r.x = mpq_class(a, c);
  r.y = mpq_class(bb, c);
  r.x.canonicalize();
  r.y.canonicalize();
  r.residual = bmp::abs(to_real(r.x) + to_real(r.y) * sd - z.re);
  r.height = std::max({mpz_class(abs(a)), mpz_class(abs(bb)), c});
  Real next = best + 1 < b.size() ? norm(b[best + 1]) : Real(0);
  Real len = norm(b[best]);
  r.gap = r.residual * next / len;
  if (r.height <= coeff_bound && len < factor * next && r.residual < tol) r.kind = Kind::quadratic;
  return r;
}

}  // namespace

Recognition recognize_quadratic(const Complex& z, long D, const mpz_class& coeff_bound, const Real& tol,
                                double gap_orders) {
  if (D < 2 || !is_squarefree(D)) throw std::invalid_argument("D must be squarefree and > 1");
  Recognition r;
  r.disc = D;
  r.residual = std::numeric_limits<double>::infinity();
  r.gap = 0;
  if (bmp::abs(z.im) >= tol) {
    r.residual = bmp::abs(z.im);
    return r;
  }
  Real factor = bmp::pow(Real(10), Real(-gap_orders));
  Recognition rat = recognize_rational(z, coeff_bound, tol, gap_orders);
  if (rat.accepted()) {
    rat.kind = Kind::quadratic;
    rat.disc = D;
    return rat;
  }
  // Scales from full working precision down to the one tol allows, finest first, so inputs
  // known only to their error bound still give a short relation at some scale.
  long lo = std::lround(-std::log10(tol.convert_to<double>())) + 3;
  long hi = std::max<long>(lo, long(current_digits()) - 5);
  Recognition last;
  for (long e = hi;; e = std::max(lo, e - 4)) {
    last = quadratic_at_scale(z, D, coeff_bound, tol, factor, bmp::pow(Real(10), Real(e)));
    if (last.accepted() || e == lo) return last;
  }
}

bool galois_conjugate_check(const Complex& z, const Complex& z_sigma, long D, const mpz_class& coeff_bound,
                            const Real& tol) {
  Recognition a = recognize_quadratic(z, D, coeff_bound, tol);
  Recognition b = recognize_quadratic(z_sigma, D, coeff_bound, tol);
  if (!a.accepted() || !b.accepted()) return false;
  return a.x == b.x && a.y == -b.y;
}

}  // namespace lval::recognize
