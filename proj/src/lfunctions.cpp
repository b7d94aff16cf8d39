#include "lval/lfunctions.hpp"

#include <algorithm>
#include <stdexcept>

namespace lval::lf {

std::vector<Quad> power_sums(const LocalFactor& f, int K) {
  int d = f.degree();
  std::vector<Quad> e(d + 1);
  for (int j = 0; j <= d; ++j) e[j] = (j % 2 ? -f.coeffs[j] : f.coeffs[j]);
  std::vector<Quad> p(K + 1);
  for (int k = 1; k <= K; ++k) {
    Quad acc = 0;
    for (int i = 1; i < k && i <= d; ++i) {
      Quad term = e[i] * p[k - i];
      if (i % 2) acc += term; else acc -= term;
    }
    if (k <= d) {
      Quad term = Quad(k) * e[k];
      if (k % 2) acc += term; else acc -= term;
    }
    p[k] = acc;
  }
  return p;
}

LocalFactor from_power_sums(long p, const std::vector<Quad>& ps, int d) {
  if (static_cast<int>(ps.size()) < d + 1) throw std::invalid_argument("not enough power sums");
  std::vector<Quad> e(d + 1);
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    Quad acc = 0;
    for (int i = 1; i <= k; ++i) {
      Quad term = e[k - i] * ps[i];
      if (i % 2) acc += term; else acc -= term;
    }
    e[k] = acc / Quad(k);
  }
  LocalFactor f;
  f.p = p;
  f.coeffs.assign(d + 1, Quad(0));
  for (int j = 0; j <= d; ++j) f.coeffs[j] = (j % 2 ? -e[j] : e[j]);
  return f;
}

namespace {

// s_k = alpha^k + beta^k for k = 0..K.
std::vector<Quad> hecke_power_sums(const SatakeData& s, int K) {
  std::vector<Quad> out(K + 1);
  Quad P(s.det);
  out[0] = 2;
  if (K >= 1) out[1] = s.a_p;
  for (int k = 2; k <= K; ++k) out[k] = s.a_p * out[k - 1] - P * out[k - 2];
  return out;
}

// Power sums of Sym^n, k = 1..K: h_n(alpha^k, beta^k).
std::vector<Quad> sym_power_sums(const SatakeData& s, int n, int K) {
  auto sk = hecke_power_sums(s, K);
  Quad P(s.det);
  std::vector<Quad> out(K + 1);
  Quad Pk = 1;
  for (int k = 1; k <= K; ++k) {
    Pk *= P;
    Quad h0 = 1, h1 = sk[k];
    if (n == 0) {
      out[k] = 1;
      continue;
    }
    for (int m = 2; m <= n; ++m) {
      Quad h2 = sk[k] * h1 - Pk * h0;
      h0 = h1;
      h1 = h2;
    }
    out[k] = h1;
  }
  return out;
}

}  // namespace

LocalFactor hecke_local_factor(const SatakeData& s) {
  LocalFactor f;
  f.p = s.p;
  f.coeffs = {Quad(1), -s.a_p, Quad(s.det)};
  return f;
}

LocalFactor sym_power_local_factor(const SatakeData& s, int n) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  if (n == 1) return hecke_local_factor(s);
  return from_power_sums(s.p, sym_power_sums(s, n, n + 1), n + 1);
}

LocalFactor tensor_local_factor(const std::vector<SatakeData>& ss) {
  if (ss.empty()) throw std::invalid_argument("tensor of no factors");
  for (const auto& s : ss)
    if (s.p != ss.front().p) throw std::invalid_argument("tensor factors at different primes");
  if (ss.size() == 1) return hecke_local_factor(ss.front());
  int d = 1 << ss.size();
  std::vector<Quad> ps(d + 1, Quad(1));
  ps[0] = Quad(d);
  for (const auto& s : ss) {
    auto sk = hecke_power_sums(s, d);
    for (int k = 1; k <= d; ++k) ps[k] *= sk[k];
  }
  return from_power_sums(ss.front().p, ps, d);
}

LocalFactor rankin_selberg_local_factor(const LocalFactor& a, const LocalFactor& b) {
  if (a.p != b.p && a.p != 0 && b.p != 0) throw std::invalid_argument("factors at different primes");
  int d = a.degree() * b.degree();
  auto pa = power_sums(a, d), pb = power_sums(b, d);
  std::vector<Quad> ps(d + 1);
  for (int k = 1; k <= d; ++k) ps[k] = pa[k] * pb[k];
  return from_power_sums(a.p ? a.p : b.p, ps, d);
}

LocalFactor twist_local_factor(const LocalFactor& f, const Quad& chi_p) {
  LocalFactor g = f;
  if (chi_p.is_zero()) {
    g.coeffs = {Quad(1)};
    return g;
  }
  Quad c = 1;
  for (std::size_t j = 1; j < g.coeffs.size(); ++j) {
    c *= chi_p;
    g.coeffs[j] *= c;
  }
  return g;
}

LocalFactor product(const LocalFactor& a, const LocalFactor& b) {
  LocalFactor r;
  r.p = a.p ? a.p : b.p;
  r.coeffs = poly_mul(a.coeffs, b.coeffs);
  return r;
}

std::vector<CGTerm> clebsch_gordan_identity(int a, int b, const SatakeData& s) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative symmetric power");
  int d = (a + 1) * (b + 1);
  auto pa = sym_power_sums(s, a, d), pb = sym_power_sums(s, b, d);
  std::vector<Quad> ps(d + 1);
  for (int k = 1; k <= d; ++k) ps[k] = pa[k] * pb[k];
  LocalFactor lhs = from_power_sums(s.p, ps, d);
  std::vector<CGTerm> terms;
  LocalFactor rhs;
  rhs.p = s.p;
  Quad Pj = 1;
  for (int j = 0; j <= std::min(a, b); ++j) {
    CGTerm t;
    t.n = a + b - 2 * j;
    t.j = j;
    t.factor = twist_local_factor(sym_power_local_factor(s, t.n), Pj);
    rhs = product(rhs, t.factor);
    terms.push_back(t);
    Pj *= Quad(s.det);
  }
  if (!(lhs == rhs))
    throw std::logic_error("Clebsch-Gordan identity failed at p=" + std::to_string(s.p) + ": " + lhs.str() +
                           " vs " + rhs.str());
  return terms;
}

SatakeData exact_satake(const Newform& f, long p) {
  SatakeData s;
  s.p = p;
  s.a_p = f.a(static_cast<std::size_t>(p));
  mpz_class det;
  mpz_ui_pow_ui(det.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(f.weight - 1));
  s.det = det;
  return s;
}

int gamma_degree(const std::vector<rep::GammaShift>& g) {
  int d = 0;
  for (const auto& x : g) d += x.complex ? 2 : 1;
  return d;
}

void validate_spec(const LSeriesSpec& spec) {
  if (gamma_degree(spec.gamma) != spec.degree)
    throw std::invalid_argument("gamma factors have degree " + std::to_string(gamma_degree(spec.gamma)) +
                                ", spec has degree " + std::to_string(spec.degree));
  if (spec.conductor < 1) throw std::invalid_argument("conductor must be positive");
  if (!spec.local_factor) throw std::invalid_argument("spec has no local factor generator");
}

std::vector<rep::GammaShift> archimedean_factor(const rep::HodgeData& h) { return rep::gamma_shifts(h); }

namespace {

std::string form_key(const Newform& f) {
  std::string k = "form:" + std::to_string(f.weight);
  if (f.hecke_field_disc != 1) {
    char sign = (!f.label.empty() && f.label.back() == 'b') ? '-' : '+';
    k += ":" + std::string(1, sign) + std::to_string(f.hecke_field_disc);
  }
  return k;
}

mpz_class ipow(long p, long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

}  // namespace

LSeriesSpec zeta_spec() {
  LSeriesSpec s;
  s.key = "zeta";
  s.degree = 1;
  s.weight = 0;
  s.gamma = {{false, 0}};
  s.local_factor = [](long p) { return LocalFactor{p, {Quad(1), Quad(-1)}}; };
  s.poles = {{1, 1}, {0, -1}};
  return s;
}

LSeriesSpec shifted_zeta_spec(long j) {
  if (j < 0) throw std::invalid_argument("negative shift");
  if (j == 0) return zeta_spec();
  LSeriesSpec s;
  s.key = "zeta|shift:" + std::to_string(j);
  s.degree = 1;
  s.weight = 2 * j;
  s.gamma = {{false, -j}};
  s.local_factor = [j](long p) { return LocalFactor{p, {Quad(1), -Quad(ipow(p, j))}}; };
  s.poles = {{j + 1, 1}, {j, -1}};
  return s;
}

LSeriesSpec hecke_spec(const Newform& f, int embedding) { return sym_power_spec(f, 1, 0, embedding); }

LSeriesSpec sym_power_spec(const Newform& f, int n, int delta, int embedding) {
  if (n < 1) throw std::invalid_argument("symmetric power must be >= 1");
  LSeriesSpec s;
  s.key = form_key(f) + "|op:sym" + std::to_string(n) + "|twist:1";
  s.degree = n + 1;
  s.weight = static_cast<long>(n) * (f.weight - 1);
  rep::HodgeData h = rep::sym_power_hodge(f.weight, n);
  if (h.middle_unsplit) h = rep::with_middle_split(h, delta);
  s.gamma = archimedean_factor(h);
  s.disc = f.hecke_field_disc;
  s.embedding = embedding;
  Newform g = f;
  s.local_factor = [g, n](long p) { return sym_power_local_factor(exact_satake(g, p), n); };
  validate_spec(s);
  return s;
}

LSeriesSpec rankin_selberg_spec(const Newform& f, const Newform& g, int embedding) {
  LSeriesSpec s;
  s.key = form_key(f) + "|op:rs:" + form_key(g) + "|twist:1";
  s.degree = 4;
  s.weight = f.weight + g.weight - 2;
  s.gamma = archimedean_factor(rep::tensor(rep::sym_power_hodge(f.weight, 1), rep::sym_power_hodge(g.weight, 1)));
  if (f.hecke_field_disc != 1 && g.hecke_field_disc != 1 && f.hecke_field_disc != g.hecke_field_disc)
    throw std::invalid_argument("coefficient fields differ");
  s.disc = std::max(f.hecke_field_disc, g.hecke_field_disc);
  s.embedding = embedding;
  Newform a = f, b = g;
  s.local_factor = [a, b](long p) { return tensor_local_factor({exact_satake(a, p), exact_satake(b, p)}); };
  validate_spec(s);
  return s;
}

LSeriesSpec twisted_hecke_spec(const Newform& f, const DirichletCharacter& chi, int embedding) {
  if (!chi.is_real()) throw std::invalid_argument("only real characters are supported");
  if (!chi.is_primitive()) throw std::invalid_argument("character must be primitive");
  LSeriesSpec s = hecke_spec(f, embedding);
  if (chi.modulus() == 1) return s;
  s.key = form_key(f) + "|op:sym1|twist:" + chi.label();
  s.conductor = chi.modulus() * chi.modulus();
  s.bad_prime_product = chi.modulus();
  Newform g = f;
  s.local_factor = [g, chi](long p) {
    return twist_local_factor(hecke_local_factor(exact_satake(g, p)), Quad(chi.real_value(p)));
  };
  return s;
}

CoefficientTable dirichlet_coefficients(const LSeriesSpec& spec, std::size_t N) {
  if (N < 1) throw std::invalid_argument("need at least one coefficient");
  CoefficientTable t;
  t.key = spec.key;
  t.disc = spec.disc;
  t.a.assign(N + 1, Quad(0));
  t.a[1] = 1;
  std::vector<std::uint32_t> spf(N + 1, 0);
  for (std::size_t i = 2; i <= N; ++i)
    if (spf[i] == 0)
      for (std::size_t j = i; j <= N; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  // Prime powers from the inverse of each local factor.
  for (std::size_t p = 2; p <= N; ++p) {
    if (spf[p] != p) continue;
    LocalFactor f = spec.local_factor(static_cast<long>(p));
    if (f.coeffs.empty() || !(f.coeffs[0] == Quad(1))) throw std::logic_error("local factor constant term is not 1");
    if (f.degree() > spec.degree) throw std::logic_error("local factor degree exceeds spec degree");
    std::vector<Quad> b{Quad(1)};
    std::size_t pe = 1;
    for (int e = 1; pe <= N / p; ++e) {
      pe *= p;
      Quad acc = 0;
      for (int j = 1; j <= std::min(e, f.degree()); ++j) acc -= f.coeffs[j] * b[e - j];
      b.push_back(acc);
      t.a[pe] = acc;
    }
  }
  for (std::size_t n = 2; n <= N; ++n) {
    std::size_t p = spf[n], m = n, pe = 1;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    if (m == 1) continue;
    t.a[n] = t.a[pe] * t.a[m];
  }
  return t;
}

}  // namespace lval::lf
