// Contour-integral evaluator for completed L-functions.
//
// For c to the right of every singularity,
//   Lambda(s) = 1/(2 pi i) int_(c) gamma(z) D(z) [ t^{s-z}/(z-s) + eps t^{s-k+z}/(z-(k-s)) ] dz
//               + sum over poles rho of Lambda: r_rho t^{s-rho}/(s-rho),
// with D(z) the Dirichlet series truncated at N and the line integral done by the trapezoid
// rule. Every error component is bounded in double precision from |gamma| on nearby lines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#include "lval/lfunctions.hpp"

namespace lval::lf {

struct LineData {
  long c = 0;
  double h = 0;
  long K = 0;
  std::size_t N = 0;
  int digits = 0;
  std::vector<Complex> data;  // gamma(z_k) D_N(z_k), z_k = c + i k h, k = 0..K
};

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

struct Planner {
  const LSeriesSpec& spec;
  const std::vector<double>& absc;  // |a_n| in double, index n
  std::map<long, double>* log_I_cache;
  double A;  // |a_n| <= n^A
  double logq;
  double k;

  double log_gamma(double x, double y) const {
    double r = 0.5 * x * logq;
    for (const auto& g : spec.gamma) {
      double ux = x + static_cast<double>(g.shift);
      if (g.complex)
        r += std::log(2.0) - ux * std::log(2 * M_PI) + log_abs_gamma_d(ux, y);
      else
        r += -0.5 * ux * std::log(M_PI) + log_abs_gamma_d(0.5 * ux, 0.5 * y);
    }
    return r;
  }

  double rightmost_singularity() const {
    double x = kNegInf;
    for (const auto& g : spec.gamma) x = std::max(x, static_cast<double>(-g.shift));
    for (const auto& p : spec.poles) x = std::max(x, static_cast<double>(p.at));
    return x;
  }

  // log sum_{n<=N} |a_n| n^{-sigma}, from the table when available, else from the growth bound.
  double log_D(double sigma, std::size_t N) const {
    double acc = kNegInf;
    std::size_t have = absc.empty() ? 0 : absc.size() - 1;
    for (std::size_t n = 1; n <= std::min(N, have); ++n)
      if (absc[n] > 0) acc = log_add(acc, std::log(absc[n]) - sigma * std::log(static_cast<double>(n)));
    if (N > have) {
      double e = sigma - A;
      double start = static_cast<double>(have + 1);
      double tail = e > 1 ? std::log(std::pow(start, 1 - e) / (e - 1) + std::pow(start, -e))
                          : (1 - e) * std::log(static_cast<double>(N)) + std::log(static_cast<double>(N - have));
      acc = log_add(acc, tail);
    }
    return acc;
  }

  // part: 0 direct, 1 dual, 2 both.
  double log_kernel(double sx, double sy, double t, double x, double y, int part) const {
    double lt = std::log(t);
    double r = kNegInf;
    if (part != 1) r = log_add(r, (sx - x) * lt - 0.5 * std::log((x - sx) * (x - sx) + (y - sy) * (y - sy)));
    if (part != 0) {
      double dx = k - sx, dy = -sy;
      r = log_add(r, (sx - k + x) * lt - 0.5 * std::log((x - dx) * (x - dx) + (y - dy) * (y - dy)));
    }
    return r;
  }

  double log_F(double sx, double sy, double t, double x, double y, double logD, int part) const {
    return log_gamma(x, y) + logD + log_kernel(sx, sy, t, x, y, part) - std::log(2 * M_PI);
  }

  // log of int_{|y| > T} F dy and int F dy on the line Re z = x.
  struct Mass {
    double total = kNegInf;
    std::vector<double> ys;
    std::vector<double> tail;  // tail[j]: mass of |y| >= ys[j]
  };

  Mass mass(double sx, double sy, double t, double x, double logD, int part, double floor_log) const {
    const double dy = 0.25;
    // symmetric grid in |y|; combine both signs
    std::vector<double> vals;
    double y = 0;
    double peak = kNegInf;
    for (int j = 0;; ++j, y += dy) {
      double v = log_add(log_F(sx, sy, t, x, y, logD, part), j == 0 ? kNegInf : log_F(sx, sy, t, x, -y, logD, part));
      vals.push_back(v);
      peak = std::max(peak, v);
      if (y > std::fabs(sy) + 4 && v < std::min(floor_log, peak) - 25) break;
      if (j > 400000) break;
    }
    Mass m;
    m.ys.resize(vals.size());
    m.tail.assign(vals.size(), kNegInf);
    double acc = kNegInf;
    for (std::size_t j = vals.size(); j-- > 0;) {
      acc = log_add(acc, vals[j] + std::log(dy));
      m.ys[j] = j * dy;
      m.tail[j] = acc;
    }
    m.total = acc + std::log(1.0 + dy);  // covers the rectangle-rule slack
    for (auto& v : m.tail) v += std::log(2.0);
    return m;
  }

  double log_I(double sigma) const {
    long key = std::lround(sigma * 64);
    auto it = log_I_cache->find(key);
    if (it != log_I_cache->end()) return it->second;
    const double dy = 0.25;
    double acc = kNegInf, peak = kNegInf;
    double y = 0;
    for (int j = 0; j < 400000; ++j, y += dy) {
      double v = log_gamma(sigma, y) + (j ? std::log(2.0) : 0.0);
      acc = log_add(acc, v + std::log(dy));
      peak = std::max(peak, v);
      if (y > 4 && v < peak - 40) break;
    }
    acc += std::log(2.0);
    (*log_I_cache)[key] = acc;
    return acc;
  }

  // Bound for the terms n > N of both parts, minimized over the shifted abscissa.
  double log_ntail(double sx, double t, double c, std::size_t N, int part) const {
    double best = std::numeric_limits<double>::infinity();
    double lt = std::log(t), lN = std::log(static_cast<double>(N));
    for (int j = 0; j <= 80; ++j) {
      double sigma = c + (j == 0 ? 0.0 : 0.25 * std::pow(1.12, j));
      double e = sigma - A - 1;
      if (e <= 0.05) continue;
      double ker = kNegInf;
      if (part != 1) ker = log_add(ker, (sx - sigma) * lt - std::log(sigma - sx));
      if (part != 0) ker = log_add(ker, (sx - k + sigma) * lt - std::log(sigma - (k - sx)));
      double v = log_I(sigma) - std::log(2 * M_PI) + ker + (-e) * lN - std::log(e);
      best = std::min(best, v);
    }
    return best;
  }
};

struct Plan {
  long c = 0;
  double a = 0;
  double h = 0;
  double T = 0;
  std::size_t N = 0;
  int digits = 0;
};

double singularity_bound(const Planner& P, double sx) { return std::max({sx, P.k - sx, P.rightmost_singularity()}); }

Plan make_plan(const Planner& P, long c, double sx, double sy, double t, double log_target, int min_digits,
               std::size_t N_cap) {
  Plan pl;
  pl.c = c;
  double x = singularity_bound(P, sx);
  pl.a = 0.5 * (static_cast<double>(c) - x);
  double budget = log_target - std::log(4.0);
  // n truncation
  std::size_t lo = 1, hi = 8;
  while (P.log_ntail(sx, t, c, hi, 2) > budget) {
    lo = hi;
    hi *= 2;
    if (hi > (std::size_t(1) << 26)) throw std::runtime_error("coefficient requirement exceeds 2^26");
  }
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (P.log_ntail(sx, t, c, mid, 2) > budget) lo = mid; else hi = mid;
  }
  pl.N = hi;
  std::size_t Nd = N_cap == 0 ? pl.N : std::min(pl.N, N_cap);
  // height truncation
  double lD = P.log_D(static_cast<double>(c), Nd);
  auto m0 = P.mass(sx, sy, t, static_cast<double>(c), lD, 2, budget);
  pl.T = m0.ys.back();
  for (std::size_t j = 0; j < m0.ys.size(); ++j)
    if (m0.tail[j] < budget) {
      pl.T = m0.ys[j];
      break;
    }
  // step from the strip |Re z - c| < a
  auto mp = P.mass(sx, sy, t, c + pl.a, P.log_D(c + pl.a, Nd), 2, budget);
  auto mm = P.mass(sx, sy, t, c - pl.a, P.log_D(c - pl.a, Nd), 2, budget);
  double lM = log_add(mp.total, mm.total);
  double r = lM - budget;
  double logterm = r > 30 ? r : std::log1p(std::exp(r));
  pl.h = 2 * M_PI * pl.a / logterm;
  // rounding
  long K = static_cast<long>(std::ceil(pl.T / pl.h)) + 1;
  double lround = m0.total + std::log(8.0 * static_cast<double>(K + pl.N + 64));
  int d = static_cast<int>(std::ceil((lround - budget) / kLn10)) + 2;
  pl.digits = std::max(d, min_digits);
  return pl;
}

double log_bound(const Planner& P, const LineData& L, double sx, double sy, double t, int part) {
  double x = singularity_bound(P, sx);
  double a = 0.5 * (static_cast<double>(L.c) - x);
  double T = L.K * L.h;
  double lD = P.log_D(static_cast<double>(L.c), L.N);
  double floor_log = P.log_gamma(sx, sy) - (L.digits + 10) * kLn10;
  auto m0 = P.mass(sx, sy, t, static_cast<double>(L.c), lD, part, floor_log);
  double trunc = kNegInf;
  for (std::size_t j = 0; j < m0.ys.size(); ++j)
    if (m0.ys[j] >= T - 1e-12) {
      trunc = m0.tail[j];
      break;
    }
  auto mp = P.mass(sx, sy, t, L.c + a, P.log_D(L.c + a, L.N), part, floor_log);
  auto mm = P.mass(sx, sy, t, L.c - a, P.log_D(L.c - a, L.N), part, floor_log);
  double lM = log_add(mp.total, mm.total);
  double q = 2 * M_PI * a / L.h;
  double trap = lM - (q > 30 ? q : std::log(std::expm1(q)));
  double tail = P.log_ntail(sx, t, static_cast<double>(L.c), L.N, part);
  double round = m0.total + std::log(8.0 * static_cast<double>(L.K + L.N + 64)) - L.digits * kLn10;
  double total = log_add(log_add(trunc, trap), log_add(tail, round));
  return total + std::log(4.0);  // safety factor
}

}  // namespace

LFunction::LFunction(LSeriesSpec spec, CoefficientTable coeffs, int digits)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)), digits_(digits) {
  validate_spec(spec_);
  if (!spec_.self_dual) throw std::invalid_argument("only self-dual specs are supported");
  abs_coeffs_.assign(coeffs_.a.size(), 0.0);
  PrecisionScope ps(30);
  for (std::size_t n = 1; n < coeffs_.a.size(); ++n)
    abs_coeffs_[n] = std::fabs(static_cast<double>(coeffs_.a[n].to_real(spec_.embedding)));
}

LFunction::~LFunction() = default;
LFunction::LFunction(LFunction&&) noexcept = default;
LFunction& LFunction::operator=(LFunction&&) noexcept = default;

namespace {

std::map<long, double>& log_I_cache_for(const LSeriesSpec& spec) {
  static thread_local std::map<std::string, std::map<long, double>> caches;
  std::string key = std::to_string(spec.conductor) + "/";
  for (const auto& g : spec.gamma) key += (g.complex ? "C" : "R") + std::to_string(g.shift) + ",";
  return caches[key];
}

Planner planner_for(const LSeriesSpec& spec, const std::vector<double>& absc) {
  Planner P{spec, absc, &log_I_cache_for(spec), 0.0, std::log(static_cast<double>(spec.conductor)),
            static_cast<double>(spec.k())};
  P.A = 0.5 * static_cast<double>(spec.weight) + std::log2(static_cast<double>(spec.degree));
  return P;
}

long base_abscissa(const Planner& P, double sx) { return static_cast<long>(std::ceil(singularity_bound(P, sx) + 3.0)); }

}  // namespace

Complex LFunction::gamma_factor(const Complex& z) const {
  // Gamma_C(u) = Gamma_R(u) Gamma_R(u + 1); group the Gamma_R shifts by parity.
  std::vector<long> mu;
  for (const auto& g : spec_.gamma) {
    mu.push_back(g.shift);
    if (g.complex) mu.push_back(g.shift + 1);
  }
  long sum_mu = 0;
  for (long m : mu) sum_mu += m;
  int d = static_cast<int>(mu.size());
  Complex result = exp((z * (log(Real(spec_.conductor)) / 2)) -
                       (z * Real(d) + Complex(Real(sum_mu))) * (log(pi()) / 2));
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<long> cls;
    for (long m : mu)
      if (((m % 2) + 2) % 2 == parity) cls.push_back(m);
    if (cls.empty()) continue;
    long m0 = *std::min_element(cls.begin(), cls.end());
    Complex u0 = (z + Complex(Real(m0))) / Real(2);
    Complex g = gamma(u0);
    for (long m : cls) {
      result *= g;
      for (long i = 0; i < (m - m0) / 2; ++i) result *= u0 + Complex(Real(i));
    }
  }
  return result;
}

std::size_t LFunction::required_terms(const Complex& s) const {
  static const std::vector<double> none;
  Planner P = planner_for(spec_, none);
  double sx = static_cast<double>(s.re), sy = static_cast<double>(s.im);
  long c = base_abscissa(P, sx);
  double lt = P.log_gamma(sx, sy) - (digits_ + kGuardDigits) * kLn10;
  std::size_t need = 0;
  for (double t : {1.0, 1.25}) need = std::max(need, make_plan(P, c, sx, sy, t, lt, digits_ + kGuardDigits, 0).N);
  return need + need / 5 + 10;
}

std::shared_ptr<LineData> LFunction::line_for(const Complex& s, double t, double scale_log) {
  Planner P = planner_for(spec_, abs_coeffs_);
  double sx = static_cast<double>(s.re), sy = static_cast<double>(s.im);
  long c0 = base_abscissa(P, sx);
  double log_target = scale_log - (digits_ + kGuardDigits) * kLn10;
  std::size_t have = coeffs_.size();
  for (const auto& L : lines_) {
    if (L->c < c0 || L->c > c0 + 2) continue;
    Plan pl = make_plan(P, L->c, sx, sy, t, log_target, digits_ + kGuardDigits, have);
    if (L->h <= pl.h && L->K * L->h >= pl.T && L->N >= pl.N && L->digits >= pl.digits) return L;
  }
  Plan pl = make_plan(P, c0, sx, sy, t, log_target, digits_ + kGuardDigits, have);
  if (pl.N > have) throw InsufficientCoefficients(have, pl.N + pl.N / 5 + 10);
  auto L = std::make_shared<LineData>();
  L->c = c0;
  L->h = pl.h * 0.8;
  L->K = static_cast<long>(std::ceil((pl.T + 3.0) / L->h));
  L->N = std::min(have, pl.N + pl.N / 5 + 10);
  L->digits = pl.digits + 5;

  PrecisionScope ps(static_cast<unsigned>(L->digits));
  Real c(L->c), h(L->h);
  std::vector<Real> base, logn;
  std::vector<std::size_t> idx;
  for (std::size_t n = 1; n <= L->N; ++n) {
    Real an = coeffs_.a[n].to_real(spec_.embedding);
    if (an == 0) continue;
    Real ln = log(Real(static_cast<long>(n)));
    idx.push_back(n);
    logn.push_back(ln);
    base.push_back(an * exp(-c * ln));
  }
  std::size_t M = idx.size();
  std::vector<Complex> rot(M), cur(M);
  for (std::size_t j = 0; j < M; ++j) {
    Real ang = h * logn[j];
    rot[j] = Complex(cos(ang), -sin(ang));
  }
  L->data.resize(L->K + 1);
  for (long k = 0; k <= L->K; ++k) {
    if (k % 64 == 0) {
      for (std::size_t j = 0; j < M; ++j) {
        Real ang = Real(k) * h * logn[j];
        cur[j] = Complex(cos(ang), -sin(ang));
      }
    } else {
      for (std::size_t j = 0; j < M; ++j) cur[j] *= rot[j];
    }
    Complex D;
    for (std::size_t j = 0; j < M; ++j) {
      D.re += base[j] * cur[j].re;
      D.im += base[j] * cur[j].im;
    }
    Complex z(c, Real(k) * h);
    L->data[k] = gamma_factor(z) * D;
  }
  lines_.push_back(L);
  return L;
}

LFunction::Split LFunction::split(const Complex& s, double t) {
  double sx = static_cast<double>(s.re), sy = static_cast<double>(s.im);
  Planner P0 = planner_for(spec_, abs_coeffs_);
  return split_at_scale(s, t, P0.log_gamma(sx, sy));
}

LFunction::Split LFunction::split_at_scale(const Complex& s, double t, double scale_log) {
  auto L = line_for(s, t, scale_log);
  Planner P = planner_for(spec_, abs_coeffs_);
  double sx = static_cast<double>(s.re), sy = static_cast<double>(s.im);
  Split out;
  PrecisionScope ps(static_cast<unsigned>(L->digits));
  Complex sh = s;  // re-round at working precision
  Real tr(t), c(L->c), h(L->h);
  Real kw(spec_.k());
  Complex ts = rpow(tr, sh - Complex(c));
  Complex tsd = rpow(tr, sh - Complex(kw) + Complex(c));
  Real lt = log(tr);
  Complex rho(cos(h * lt), -sin(h * lt));  // t^{-ih}
  Complex direct, dual;
  Complex rk(Real(1)), rinv(Real(1));
  Complex sd = Complex(kw) - sh;
  for (long k = 0; k <= L->K; ++k) {
    Complex zp(c, Real(k) * h);
    const Complex& up = L->data[k];
    direct += up * ts * rk / (zp - sh);
    dual += up * tsd * rinv / (zp - sd);
    if (k > 0) {
      Complex zm(c, -Real(k) * h);
      Complex um = conj(up);
      direct += um * ts * rinv / (zm - sh);
      dual += um * tsd * rk / (zm - sd);
    }
    rk *= rho;
    rinv *= conj(rho);
  }
  Real scale = h / (2 * pi());
  out.direct = direct * scale;
  out.dual = dual * scale;
  for (const auto& pole : spec_.poles) {
    Complex d = sh - Complex(Real(pole.at));
    out.polar += Complex(Real(pole.residue)) * rpow(tr, d) / d;
  }
  out.bound_direct = Real(std::exp(log_bound(P, *L, sx, sy, t, 0)));
  out.bound_dual = Real(std::exp(log_bound(P, *L, sx, sy, t, 1)));
  out.working_digits = L->digits;
  out.terms = L->N;
  out.nodes = 2 * L->K + 1;
  return out;
}

int LFunction::root_number() {
  if (!spec_.root_number) {
    auto e = solve_root_number(*this);
    (void)e;
  }
  return *spec_.root_number;
}

Complex LFunction::completed(const Complex& s, double t) {
  int eps = root_number();
  Split sp = split(s, t);
  return sp.direct + sp.dual * Real(eps) + sp.polar;
}

EvalResult LFunction::evaluate(const Complex& s) {
  int eps = root_number();
  double sx = static_cast<double>(s.re), sy = static_cast<double>(s.im);
  Planner P = planner_for(spec_, abs_coeffs_);
  double scale = P.log_gamma(sx, sy);
  EvalResult r;
  for (int attempt = 0; attempt < 2; ++attempt) {
    Split sp = split_at_scale(s, 1.0, scale);
    PrecisionScope ps(static_cast<unsigned>(sp.working_digits));
    r.completed = sp.direct + sp.dual * Real(eps) + sp.polar;
    r.completed_error = sp.bound_direct + sp.bound_dual;
    Complex g = gamma_factor(s);
    r.value = r.completed / g;
    r.error_bound = r.completed_error / abs(g);
    r.working_digits = sp.working_digits;
    r.terms_used = sp.terms;
    r.nodes = sp.nodes;
    Real mag = abs(r.completed);
    Real goal = mag * pow(Real(10), Real(-digits_));
    if (r.completed_error <= goal || mag == 0) break;
    double lm = static_cast<double>(log(mag));
    // Lambda(s) much smaller than the planning scale: re-plan once unless it looks like a zero.
    if (lm < scale - (digits_ / 2.0) * kLn10) break;
    scale = std::min(scale, lm);
  }
  return r;
}

std::complex<double> solve_root_number(LFunction& L, int test_points) {
  const auto& spec = L.spec();
  double k = static_cast<double>(spec.k());
  std::vector<std::complex<double>> est;
  std::vector<double> errs;
  PrecisionScope ps(static_cast<unsigned>(L.digits() + LFunction::kGuardDigits));
  for (int j = 0; j < test_points; ++j) {
    Complex s(Real(k / 2 + 0.3 + 0.45 * j), Real(0.2 * j));
    auto a = L.split(s, 1.0), b = L.split(s, 1.25);
    Complex num = (b.direct + b.polar) - (a.direct + a.polar);
    Complex den = a.dual - b.dual;
    Complex e = num / den;
    Real err = (a.bound_direct + b.bound_direct + (abs(e) + 1) * (a.bound_dual + b.bound_dual)) / abs(den);
    est.emplace_back(static_cast<double>(e.re), static_cast<double>(e.im));
    errs.push_back(static_cast<double>(err));
  }
  double tol = std::pow(10.0, -(L.digits() - 4));
  for (std::size_t j = 1; j < est.size(); ++j)
    if (std::abs(est[j] - est[0]) > tol + errs[j] + errs[0])
      throw RootNumberError("root number estimates disagree: (" + std::to_string(est[0].real()) + "," +
                            std::to_string(est[0].imag()) + ") vs (" + std::to_string(est[j].real()) + "," +
                            std::to_string(est[j].imag()) + ")");
  std::complex<double> e = est[0];
  if (spec.self_dual) {
    int snap = e.real() >= 0 ? 1 : -1;
    if (std::abs(e - std::complex<double>(snap, 0)) > tol + errs[0])
      throw RootNumberError("root number " + std::to_string(e.real()) + " is not +-1");
    L.set_root_number(snap);
  }
  return e;
}

FECheck fe_selfcheck(LFunction& L, int samples, unsigned seed) {
  FECheck out;
  out.root_number = L.root_number();
  double k = static_cast<double>(L.spec().k());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(-2.0, 2.0);
  PrecisionScope ps(static_cast<unsigned>(L.digits() + LFunction::kGuardDigits));
  out.max_residual = 0;
  for (int j = 0; j < samples; ++j) {
    Complex s(Real(k / 2 + ux(rng)), Real(uy(rng)));
    Complex a = L.completed(s, 1.0);
    Complex b = L.completed(Complex(Real(k)) - s, 1.2);
    PrecisionScope inner(static_cast<unsigned>(L.digits() + LFunction::kGuardDigits));
    Real r = abs(a - b * Real(out.root_number)) / abs(a);
    out.max_residual = std::max(out.max_residual, r);
    out.points.push_back(s);
  }
  return out;
}

int resolve_middle_split(const Newform& f, int n, int digits, Real* residual) {
  if (n % 2) return 0;
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::pair<int, Real>> memo;
  auto key = std::make_pair(sym_power_spec(f, n, 0).key, n);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end()) {
      if (residual) *residual = it->second.second;
      return it->second.first;
    }
  }
  int chosen = -1;
  Real best = 1;
  for (int delta : {0, 1}) {
    LSeriesSpec spec = sym_power_spec(f, n, delta);
    LFunction probe(spec, CoefficientTable{}, digits);
    PrecisionScope ps(static_cast<unsigned>(digits + LFunction::kGuardDigits));
    double k = static_cast<double>(spec.k());
    std::size_t need = 0;
    for (double dx : {0.3, 0.75, 1.2, 1.0})
      need = std::max(need, probe.required_terms(Complex(Real(k / 2 + dx), Real(2.0))));
    LFunction L(spec, dirichlet_coefficients(spec, need), digits);
    try {
      auto fc = fe_selfcheck(L, 2, 7);
      if (fc.max_residual < pow(Real(10), Real(-(digits - 5))) && fc.max_residual < best) {
        best = fc.max_residual;
        chosen = delta;
      }
    } catch (const RootNumberError&) {
      // wrong gamma data: the functional equation has no consistent sign
    }
  }
  if (chosen < 0) throw std::runtime_error("neither middle split satisfies the functional equation");
  if (residual) *residual = best;
  std::lock_guard<std::mutex> lock(mu);
  memo[key] = {chosen, best};
  return chosen;
}

}  // namespace lval::lf
