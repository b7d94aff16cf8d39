#include <map>
#include <random>

#include "doctest.h"
#include "lval/periods.hpp"
#include "lval/recognize.hpp"

using namespace lval;
using namespace lval::periods;
using modforms::level_one_eigenform;
using recognize::recognize_rational;

namespace {

constexpr int kDigits = 40;

struct Fixture {
  Newform delta = level_one_eigenform(12, 1200);
  Newform f16 = level_one_eigenform(16, 1200);
  FormPeriods pd, pf;

  Fixture() {
    PrecisionScope ps(kDigits + 15);
    pd = form_periods(delta, kDigits);
    pf = form_periods(f16, kDigits);
  }
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

lf::LFunction hecke(const Newform& f) {
  auto spec = lf::hecke_spec(f);
  lf::LFunction probe(spec, lf::CoefficientTable{}, kDigits);
  std::size_t need = 1;
  for (int m = 1; m < f.weight; ++m) need = std::max(need, probe.required_terms(Complex(Real(m))));
  return lf::LFunction(spec, lf::dirichlet_coefficients(spec, need), kDigits);
}

lf::LFunction sym2(const Newform& f) {
  auto spec = lf::sym_power_spec(f, 2, 1);
  lf::LFunction probe(spec, lf::CoefficientTable{}, kDigits);
  std::size_t need = 1;
  for (int m : {1, 3, 5, 12}) need = std::max(need, probe.required_terms(Complex(Real(m))));
  return lf::LFunction(spec, lf::dirichlet_coefficients(spec, need), kDigits);
}

Real rel(const Complex& a, const Complex& b) { return abs(a - b) / abs(b); }

// L(m, f) / ((2 pi i)^m c^{(-1)^m}) from the incomplete gamma oracle.
const std::map<std::pair<int, int>, mpq_class>& oracle_ratios() {
  static const std::map<std::pair<int, int>, mpq_class> r = {
      {{12, 3}, mpq_class(-691, 3240)},       {{12, 4}, mpq_class(-25, 288)},
      {{12, 5}, mpq_class(691, 60480)},       {{12, 6}, mpq_class(1, 288)},
      {{12, 7}, mpq_class(-691, 1814400)},    {{12, 8}, mpq_class(-5, 48384)},
      {{12, 9}, mpq_class(691, 65318400)},    {{12, 10}, mpq_class(1, 362880)},
      {{12, 11}, mpq_class(-1, 3628800)},     {{16, 3}, mpq_class(-3617, 32760)},
      {{16, 4}, mpq_class(-245, 5616)},       {{16, 5}, mpq_class(3617, 1235520)},
      {{16, 6}, mpq_class(49, 56160)},        {{16, 7}, mpq_class(-3617, 70761600)},
      {{16, 8}, mpq_class(-1, 67392)},        {{16, 9}, mpq_class(3617, 3962649600)},
      {{16, 10}, mpq_class(7, 24261120)},     {{16, 11}, mpq_class(mpz_class(-3617), mpz_class("186810624000"))},
      {{16, 12}, mpq_class(-7, 1067489280)},  {{16, 14}, mpq_class(1, 6227020800)},
      {{16, 15}, mpq_class(mpz_class(-1), mpz_class("87178291200"))},
  };
  return r;
}

}  // namespace

TEST_CASE("gauss sums") {
  PrecisionScope ps(50);
  CHECK(abs(gauss_sum(DirichletCharacter::trivial()) - Complex(Real(1))) == 0);
  CHECK(abs(gauss_sum(DirichletCharacter::quadratic(5)) - Complex(boost::multiprecision::sqrt(Real(5)))) <
        Real("1e-45"));
  CHECK_THROWS_AS(gauss_sum(DirichletCharacter::trivial(4)), std::invalid_argument);
  int primitive = 0;
  for (long N = 2; N <= 20; ++N)
    for (const auto& chi : DirichletCharacter::all(N)) {
      if (!chi.is_primitive()) {
        CHECK_THROWS_AS(gauss_sum(chi), std::invalid_argument);
        continue;
      }
      ++primitive;
      Complex g = gauss_sum(chi), gb = gauss_sum(chi.conj());
      CHECK(boost::multiprecision::abs(abs2(g) - Real(N)) < Real("1e-45"));
      Real sign = chi.is_even() ? 1 : -1;
      CHECK(abs(g * gb - Complex(sign * N)) < Real("1e-45"));
    }
  CHECK(primitive > 30);
  // Real characters: G = sqrt(N) for even, i sqrt(N) for odd
  for (long D : {5, 8, 12, 13, -3, -4, -7, -8}) {
    Complex g = gauss_sum(DirichletCharacter::quadratic(D));
    Real s = boost::multiprecision::sqrt(Real(std::abs(D)));
    Complex want = D > 0 ? Complex(s) : Complex(Real(0), s);
    CHECK(abs(g - want) < Real("1e-45"));
  }
}

TEST_CASE("delta period") {
  PrecisionScope ps(50);
  for (int k : {12, 16, 18, 26}) {
    Complex d = delta_period(k);
    CHECK(abs(d - pow(two_pi_i(), 1 - k)) == 0);
    Real want = boost::multiprecision::pow(2 * pi(), Real(1 - k));
    CHECK(boost::multiprecision::abs(abs(d) - want) / want < Real("1e-45"));
  }
}

TEST_CASE("canonical c+- for Delta and f16") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  CHECK(f.pd.m_plus == 2);
  CHECK(f.pd.m_minus == 1);
  CHECK(f.pf.m_plus == 2);
  CHECK(f.pf.m_minus == 1);
  CHECK(abs(f.pd.delta - pow(two_pi_i(), -11)) == 0);
  Real tol("1e-25");
  for (const auto* p : {&f.pd, &f.pf}) {
    CHECK(abs(p->c_plus) > 0);
    CHECK(abs(p->c_minus) > 0);
    CHECK(p->petersson > 0);
    // c+ is real, c- is imaginary: L(m) is real and (2 pi i)^m alternates
    CHECK(boost::multiprecision::abs(p->c_plus.im) == 0);
    CHECK(boost::multiprecision::abs(p->c_minus.re) == 0);
    auto L = hecke(p->weight == 12 ? f.delta : f.f16);
    for (int m = 1; m < p->weight; ++m) {
      auto r = L.evaluate(Complex(Real(m)));
      Complex ratio = r.value / (pow(two_pi_i(), m) * p->c(m % 2 == 0 ? 1 : -1));
      if (m == p->m_plus || m == p->m_minus) {
        CHECK(rel(ratio, Complex(Real(1))) < Real("1e-35"));
        continue;
      }
      auto it = oracle_ratios().find({p->weight, m});
      auto rec = recognize_rational(ratio, mpz_class("1000000000000000"), tol);
      REQUIRE(rec.accepted());
      if (it != oracle_ratios().end()) CHECK(rec.x == it->second);
    }
  }
}

TEST_CASE("canonical c+- rejects vanishing values") {
  PrecisionScope ps(kDigits + 15);
  auto spec = lf::hecke_spec(fx().delta);
  lf::CoefficientTable zero;
  zero.key = spec.key;
  zero.a.assign(400, Quad(0));
  lf::LFunction L(spec, zero, kDigits);
  L.set_root_number(1);
  FormPeriods out;
  CHECK_THROWS_AS(canonical_c_pm(L, 12, out), std::runtime_error);
}

TEST_CASE("symmetric power periods") {
  PrecisionScope ps(kDigits + 15);
  const auto& p = fx().pd;
  for (int s : {1, -1}) {
    auto e = sym_period(p, 1, s);
    CHECK(abs(e.value - p.c(s)) == 0);
  }
  auto e2p = sym_period(p, 2, 1), e2m = sym_period(p, 2, -1);
  CHECK(rel(e2p.value, p.delta * p.c_plus * p.c_minus) < Real("1e-50"));
  CHECK(rel(e2m.value, p.c_plus * p.c_minus) < Real("1e-50"));
  CHECK(e2p.exponent_of("delta(12)") == 1);
  CHECK(e2m.exponent_of("delta(12)") == 0);
  for (int n = 1; n <= 7; n += 2) {
    long r = n / 2;
    auto a = sym_period(p, n, 1), b = sym_period(p, n, -1);
    CHECK(a.exponent_of("c+(12)") - b.exponent_of("c+(12)") == r + 1);
    CHECK(b.exponent_of("c-(12)") - a.exponent_of("c-(12)") == r + 1);
    CHECK(a.exponent_of("delta(12)") == b.exponent_of("delta(12)"));
    CHECK(rel(a.value / b.value, pow(p.c_plus / p.c_minus, r + 1)) < Real("1e-45"));
  }
  CHECK_THROWS_AS(sym_period(p, 0, 1), std::invalid_argument);
}

TEST_CASE("audit replay is exact") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  std::vector<PeriodExpr> all;
  for (int n = 1; n <= 4; ++n)
    for (int s : {1, -1}) {
      all.push_back(sym_period(f.pd, n, s));
      all.push_back(sym_q_period(f.pf, n, 0, s));
      all.push_back(gl_n_gl2_period(n, 0, Complex(Real(1)), 1, f.pd, s));
    }
  all.push_back(tensor_period({f.pd, f.pf}));
  for (const auto& e : all) {
    Complex v = e.replay();
    CHECK(v.re == e.value.re);
    CHECK(v.im == e.value.im);
    CHECK(abs(e.value) > 0);
    CHECK(!e.audit().empty());
  }
}

TEST_CASE("tensor periods") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  FormPeriods a = f.pd, b = f.pd;
  a.label = "12a";
  b.label = "12b";
  auto e = tensor_period({a, b});
  CHECK(e.exponent_of("pi^12<12a,12a>") == 1);
  CHECK(e.exponent_of("pi^12<12b,12b>") == 1);
  CHECK(e.exponent_of("2pi i") == -22);
  CHECK(abs(f.pd.gauss_omega - Complex(Real(1))) == 0);
  auto x = tensor_period({f.pd, f.pf}), y = tensor_period({f.pf, f.pd});
  CHECK(rel(x.value, y.value) < Real("1e-50"));
  // (12, 16): t = (1, 0), so only the weight-16 norm survives
  CHECK(x.exponent_of("pi^12<12,12>") == 0);
  CHECK(x.exponent_of("pi^16<16,16>") == 1);
  CHECK(x.exponent_of("2pi i") == -26);
  CHECK_THROWS_AS(tensor_period({f.pd}), std::invalid_argument);
}

TEST_CASE("GL_n x GL_2 periods") {
  PrecisionScope ps(kDigits + 15);
  const auto& p = fx().pd;
  Complex one(Real(1));
  auto q2 = gl_n_gl2_period(2, 0, one, 1, p, 1);
  CHECK(q2.exponent_of("2pi i") == -1);
  CHECK(q2.exponent_of("c+(12)") == 1);
  CHECK(q2.exponent_of("c-(12)") == 1);
  CHECK(rel(q2.value, p.c_plus * p.c_minus / two_pi_i()) < Real("1e-50"));
  for (int n : {2, 4, 6}) CHECK(abs(gl_n_gl2_period(n, 0, one, 1, p, 1).value - gl_n_gl2_period(n, 0, one, 1, p, -1).value) == 0);
  // n = 3, w = 0, trivial omega: eps = -1, so q+ carries c- and q- carries c+
  auto q3p = gl_n_gl2_period(3, 0, one, 1, p, 1), q3m = gl_n_gl2_period(3, 0, one, 1, p, -1);
  CHECK(q3p.exponent_of("c-(12)") == 2);
  CHECK(q3p.exponent_of("c+(12)") == 1);
  CHECK(q3m.exponent_of("c+(12)") == 2);
  CHECK(q3p.exponent_of("2pi i") == 0);
  // an odd omega flips eps
  CHECK(gl_n_gl2_period(3, 0, one, -1, p, 1).exponent_of("c+(12)") == 2);
  CHECK_THROWS_AS(gl_n_gl2_period(3, 1, one, 1, p, 1), std::invalid_argument);
}

TEST_CASE("unitary adapter") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  // kappa = 12: h = 6 even, signs preserved
  auto u = unitary_c(f.pd, 0, 1);
  CHECK(u.exponent_of("2pi i") == 6);
  CHECK(u.exponent_of("c+(12)") == 1);
  // kappa = 18: h = 9 odd, signs swapped
  FormPeriods p18 = f.pd;
  p18.label = "18";
  p18.weight = 18;
  auto v = unitary_c(p18, 0, 1);
  CHECK(v.exponent_of("c-(18)") == 1);
  CHECK(v.exponent_of("c+(18)") == 0);
  // n = 1 of the unitary formula is the adapter itself
  for (int s : {1, -1}) CHECK(abs(sym_q_period(f.pd, 1, 0, s).value - unitary_c(f.pd, 0, s).value) == 0);
  // odd n: q+ / q- = (c+(Pi) / c-(Pi))^{r+1}
  for (int n : {1, 3}) {
    long r = n / 2;
    Complex ratio = sym_q_period(f.pf, n, 0, 1).value / sym_q_period(f.pf, n, 0, -1).value;
    Complex cpi = unitary_c(f.pf, 0, 1).value / unitary_c(f.pf, 0, -1).value;
    CHECK(rel(ratio, pow(cpi, r + 1)) < Real("1e-45"));
  }
  // even n, w = 0: q = (2 pi i)^{-r(r+1)/2} (c+(Pi) c-(Pi))^{r(r+1)/2}
  for (int n : {2, 4}) {
    long r = n / 2, e = r * (r + 1) / 2;
    Complex want = pow(two_pi_i(), -e) * pow(unitary_c(f.pd, 0, 1).value * unitary_c(f.pd, 0, -1).value, e);
    for (int s : {1, -1}) CHECK(rel(sym_q_period(f.pd, n, 0, s).value, want) < Real("1e-45"));
  }
}

TEST_CASE("unitary and classical symmetric power periods differ by a power of 2 pi i") {
  PrecisionScope ps(kDigits + 15);
  const auto& base = fx().pd;
  Real tol("1e-40");
  // The recorded exponent minus the critical-strip shift d n (k - 1) / 2 depends only on n.
  std::map<std::pair<int, int>, long> residual_exponent;
  for (int k : {12, 16, 18, 20, 22, 26}) {
    FormPeriods p = base;
    p.label = std::to_string(k);
    p.weight = k;
    p.delta = delta_period(k);
    for (int n = 1; n <= 4; ++n) {
      auto [dp, dm] = rep::deligne_dims(n);
      for (int s : {1, -1}) {
        auto cl = sym_period(p, n, s);
        // the unitary sign whose c-exponents match
        int match = 0;
        for (int t : {1, -1}) {
          auto q = sym_q_period(p, n, 0, t);
          if (q.exponent_of("c+(" + p.label + ")") == cl.exponent_of("c+(" + p.label + ")") &&
              q.exponent_of("c-(" + p.label + ")") == cl.exponent_of("c-(" + p.label + ")"))
            match = t;
        }
        REQUIRE(match != 0);
        if (n % 2 == 1) CHECK(match == ((k / 2) % 2 == 0 ? s : -s));
        auto q = sym_q_period(p, n, 0, match);
        long e = q.exponent_of("2pi i") - cl.exponent_of("delta(" + p.label + ")") * (1 - k);
        Complex ratio = q.value / (cl.value * pow(two_pi_i(), e));
        auto rec = recognize_rational(ratio, mpz_class(1000), tol);
        REQUIRE(rec.accepted());
        CHECK(rec.x == 1);
        long d = s > 0 ? dp : dm;
        long twice = 2 * e - d * n * (k - 1);
        auto key = std::make_pair(n, s);
        if (residual_exponent.count(key))
          CHECK(residual_exponent[key] == twice);
        else
          residual_exponent[key] = twice;
      }
    }
  }
  CHECK(residual_exponent.size() == 8);
}

TEST_CASE("Petersson norm via Sym^2") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  // fit at weight 12
  Real kernel = sym2_petersson_kernel(f.delta, kDigits);
  Real fitted = f.pd.petersson / (kernel * 3 / pi());
  auto rec = recognize_rational(Complex(fitted), mpz_class(1000), Real("1e-25"));
  REQUIRE(rec.accepted());
  CHECK(rec.x == 2);
  CHECK(boost::multiprecision::abs(petersson_via_sym2(f.delta, kDigits, rec.x) - f.pd.petersson) / f.pd.petersson <
        Real("1e-30"));
  // validate at weight 16
  Real v = petersson_via_sym2(f.f16, kDigits, rec.x);
  CHECK(boost::multiprecision::abs(v - f.pf.petersson) / f.pf.petersson < Real("1e-10"));
}

TEST_CASE("rescaling by rationals keeps ratios rational") {
  PrecisionScope ps(kDigits + 15);
  const auto& f = fx();
  PeriodTable t;
  t.forms["12"] = f.pd;
  t.forms["16"] = f.pf;
  auto L = sym2(f.delta);
  auto v3 = L.evaluate(Complex(Real(3))).value, v12 = L.evaluate(Complex(Real(12))).value;
  auto ratio = [&](const PeriodTable& tab, int m, const Complex& v) {
    int s = m % 2 == 0 ? 1 : -1;
    auto [dp, dm] = rep::deligne_dims(2);
    return v / (pow(two_pi_i(), (s > 0 ? dp : dm) * m) * sym_period(tab.at("12"), 2, s).value);
  };
  mpz_class H("100000000000000000000");
  Real tol("1e-25");
  auto base3 = recognize_rational(ratio(t, 3, v3), H, tol), base12 = recognize_rational(ratio(t, 12, v12), H, tol);
  REQUIRE(base3.accepted());
  REQUIRE(base12.accepted());
  CHECK(base3.x == mpq_class(11056, 7));
  CHECK(base12.x == mpq_class(-691, 574801920));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto r = t.rescaled(rng, 100);
    const auto& a = r.at("12");
    CHECK(abs(a.c_plus) > 0);
    auto r3 = recognize_rational(ratio(r, 3, v3), H, tol), r12 = recognize_rational(ratio(r, 12, v12), H, tol);
    CHECK(r3.accepted());
    CHECK(r12.accepted());
    // the ratio moves by the exact rescaling factor
    Real fp = (a.c_plus / f.pd.c_plus).re, fm = (a.c_minus / f.pd.c_minus).re;
    auto qpr = recognize_rational(Complex(fp), mpz_class(100), Real("1e-40"));
    auto qmr = recognize_rational(Complex(fm), mpz_class(100), Real("1e-40"));
    REQUIRE(qpr.accepted());
    REQUIRE(qmr.accepted());
    CHECK(r3.x == base3.x / (qpr.x * qmr.x));
  }
}
