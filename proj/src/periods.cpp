#include "lval/periods.hpp"

#include <sstream>
#include <stdexcept>

namespace lval::periods {

Complex gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw std::invalid_argument("gauss sum needs a primitive character");
  long N = chi.modulus();
  if (N == 1) return Complex(Real(1));
  Complex g;
  for (long a = 1; a < N; ++a) {
    if (chi.exponent(a) < 0) continue;
    Real ang = 2 * pi() * Real(a) / Real(N);
    g += chi.value(a) * Complex(cos(ang), sin(ang));
  }
  return g;
}

Complex PeriodExpr::replay() const {
  Complex v(Real(1));
  for (const auto& f : factors) v *= pow(f.base, f.exponent);
  return v;
}

long PeriodExpr::exponent_of(const std::string& symbol) const {
  long e = 0;
  for (const auto& f : factors)
    if (f.symbol == symbol) e += f.exponent;
  return e;
}

std::string PeriodExpr::audit() const {
  std::ostringstream os;
  os << formula << ":";
  for (const auto& f : factors) os << " " << f.symbol << "^" << f.exponent;
  return os.str();
}

PeriodExpr make_expr(std::string formula, std::vector<PeriodFactor> factors) {
  PeriodExpr e;
  e.formula = std::move(formula);
  for (auto& f : factors)
    if (f.exponent != 0) e.factors.push_back(std::move(f));
  e.value = e.replay();
  return e;
}

namespace {

long exact_half(long a) {
  if (a % 2) throw std::invalid_argument("period exponent is not an integer");
  return a / 2;
}

}  // namespace

FormPeriods FormPeriods::rescaled(const mpq_class& qp, const mpq_class& qm, const mpq_class& qd,
                                  const mpq_class& qn) const {
  FormPeriods r = *this;
  r.c_plus = c_plus * to_real(qp);
  r.c_minus = c_minus * to_real(qm);
  r.delta = delta * to_real(qd);
  r.petersson = petersson * to_real(qn);
  r.petersson_error = petersson_error * boost::multiprecision::abs(to_real(qn));
  return r;
}

Complex delta_period(int weight) { return pow(two_pi_i(), 1 - weight); }

void canonical_c_pm(lf::LFunction& L, int weight, FormPeriods& out) {
  int digits = L.digits();
  Real noise = pow(Real(10), Real(-(digits / 2)));
  for (int parity : {0, 1}) {
    bool found = false;
    for (int m = parity == 0 ? 2 : 1; m <= weight - 1; m += 2) {
      auto r = L.evaluate(Complex(Real(m)));
      if (abs(r.value) <= noise || abs(r.value) <= 1000 * r.error_bound) continue;
      Complex c = r.value / pow(two_pi_i(), m);
      if (parity == 0) {
        out.c_plus = c;
        out.m_plus = m;
      } else {
        out.c_minus = c;
        out.m_minus = m;
      }
      found = true;
      break;
    }
    if (!found) throw std::runtime_error("every critical value of one parity vanishes numerically");
  }
}

FormPeriods form_periods(const Newform& f, int digits, int embedding) {
  FormPeriods out;
  out.label = f.label.empty() ? std::to_string(f.weight) : f.label;
  if (embedding < 0) out.label += "-";
  out.weight = f.weight;
  out.embedding = embedding;
  auto spec = lf::hecke_spec(f, embedding);
  lf::LFunction probe(spec, lf::CoefficientTable{}, digits);
  std::size_t need = std::max(probe.required_terms(Complex(Real(1))), probe.required_terms(Complex(Real(2))));
  need = std::max(need, probe.required_terms(Complex(Real(f.weight / 2.0 + 1), Real(2))));
  lf::LFunction L(spec, lf::dirichlet_coefficients(spec, need), digits);
  canonical_c_pm(L, f.weight, out);
  out.delta = delta_period(f.weight);
  auto pn = modforms::petersson_norm(f, digits, embedding);
  out.petersson = pn.value;
  out.petersson_error = pn.error_bound;
  return out;
}

PeriodExpr sym_period(const FormPeriods& f, int n, int sign) {
  if (n < 1) throw std::invalid_argument("symmetric power must be >= 1");
  long r = n / 2;
  const std::string fs = "c+(" + f.label + ")", gs = "c-(" + f.label + ")";
  if (n % 2 == 0) {
    long de = sign > 0 ? r * (r + 1) / 2 : r * (r - 1) / 2;
    long ce = r * (r + 1) / 2;
    return make_expr("c" + std::string(sign > 0 ? "+" : "-") + "(Sym" + std::to_string(n) + ")",
                     {{"delta(" + f.label + ")", de, f.delta}, {fs, ce, f.c_plus}, {gs, ce, f.c_minus}});
  }
  long de = r * (r + 1) / 2;
  long same = (r + 1) * (r + 2) / 2, other = r * (r + 1) / 2;
  return make_expr("c" + std::string(sign > 0 ? "+" : "-") + "(Sym" + std::to_string(n) + ")",
                   {{"delta(" + f.label + ")", de, f.delta},
                    {fs, sign > 0 ? same : other, f.c_plus},
                    {gs, sign > 0 ? other : same, f.c_minus}});
}

PeriodExpr tensor_period(const std::vector<FormPeriods>& forms) {
  std::size_t n = forms.size();
  if (n < 2) throw std::invalid_argument("tensor period needs at least two forms");
  std::vector<long> kappas;
  for (const auto& f : forms) kappas.push_back(f.weight);
  std::vector<long> t = rep::blasius_exponents(kappas);
  long e = 1L << (n - 2);
  long tpi = 0;
  for (long k : kappas) tpi += e * (1 - k);
  std::vector<PeriodFactor> fac{{"2pi i", tpi, two_pi_i()}};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = forms[i];
    fac.push_back({"G(omega_" + f.label + ")", e, f.gauss_omega});
    fac.push_back({"pi^" + std::to_string(f.weight) + "<" + f.label + "," + f.label + ">", e - t[i],
                   Complex(boost::multiprecision::pow(pi(), Real(f.weight)) * f.petersson)});
  }
  std::string name = "c(";
  for (std::size_t i = 0; i < n; ++i) name += (i ? "x" : "") + forms[i].label;
  return make_expr(name + ")", fac);
}

PeriodExpr gl_n_gl2_period(int n, long w, const Complex& gauss_omega_sigma, int omega_sign, const FormPeriods& p,
                           int sign) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  long delta = n % 2;
  long h = n / 2;
  long tpi = h * (delta - 1) + exact_half(n * w);
  std::vector<PeriodFactor> fac{{"2pi i", tpi, two_pi_i()},
                                {"G(omega_Sigma)", 1, gauss_omega_sigma},
                                {"c+(" + p.label + ")", h, p.c_plus},
                                {"c-(" + p.label + ")", h, p.c_minus}};
  if (n % 2) {
    int eps = ((h + exact_half(w)) % 2 == 0 ? 1 : -1) * omega_sign;
    int s = sign * eps;
    fac.push_back({s > 0 ? "c+(" + p.label + ")" : "c-(" + p.label + ")", 1, p.c(s)});
  }
  return make_expr("q" + std::string(sign > 0 ? "+" : "-") + "(GL" + std::to_string(n) + "xGL2)", fac);
}

PeriodExpr unitary_c(const FormPeriods& f, long w, int sign) {
  long h = exact_half(f.weight + w);
  int s = h % 2 == 0 ? sign : -sign;
  return make_expr("c" + std::string(sign > 0 ? "+" : "-") + "(Pi_" + f.label + ")",
                   {{"2pi i", h, two_pi_i()}, {s > 0 ? "c+(" + f.label + ")" : "c-(" + f.label + ")", 1, f.c(s)}});
}

PeriodExpr sym_q_period(const FormPeriods& f, int n, long w, int sign) {
  if (n < 1) throw std::invalid_argument("symmetric power must be >= 1");
  long r = n / 2;
  long h = exact_half(f.weight + w);
  // c^{s}(Pi) = (2 pi i)^h c^{s (-1)^h}(f)
  auto pi_sign = [h](int s) { return h % 2 == 0 ? s : -s; };
  long tpi, ge, ep, em;
  if (n % 2 == 0) {
    long rr = sign > 0 ? r * (r + 1) : r * (r - 1);
    tpi = exact_half(rr * w) - r * (r + 1) / 2;
    ge = rr / 2;
    ep = em = r * (r + 1) / 2;
  } else {
    tpi = exact_half(r * (r + 1) * (w - 1));
    ge = r * (r + 1) / 2;
    long same = (r + 1) * (r + 2) / 2, other = r * (r + 1) / 2;
    ep = sign > 0 ? same : other;
    em = sign > 0 ? other : same;
  }
  // Expand c^{+}(Pi)^{ep} c^{-}(Pi)^{em} into building blocks of f.
  long cf_plus = (pi_sign(1) > 0 ? ep : em), cf_minus = (pi_sign(1) > 0 ? em : ep);
  tpi += h * (ep + em);
  return make_expr("q" + std::string(sign > 0 ? "+" : "-") + "(Sym" + std::to_string(n) + " Pi)",
                   {{"2pi i", tpi, two_pi_i()},
                    {"G(omega_" + f.label + ")", ge, f.gauss_omega},
                    {"c+(" + f.label + ")", cf_plus, f.c_plus},
                    {"c-(" + f.label + ")", cf_minus, f.c_minus}});
}

Real sym2_petersson_kernel(const Newform& f, int digits, int embedding) {
  int delta = lf::resolve_middle_split(f, 2, digits);
  auto spec = lf::sym_power_spec(f, 2, delta, embedding);
  Complex s{Real(f.weight)};
  lf::LFunction probe(spec, lf::CoefficientTable{}, digits);
  lf::LFunction L(spec, lf::dirichlet_coefficients(spec, probe.required_terms(s)), digits);
  Real v = L.evaluate(s).value.re;
  Real k(f.weight);
  return boost::multiprecision::tgamma(k) / (boost::multiprecision::pow(4 * pi(), k) * pi()) * v;
}

Real petersson_via_sym2(const Newform& f, int digits, const mpq_class& constant, int embedding) {
  return to_real(constant) * sym2_petersson_kernel(f, digits, embedding) * 3 / pi();
}

mpq_class random_rational(std::mt19937_64& rng, long max_height) {
  std::uniform_int_distribution<long> num(-max_height, max_height), den(1, max_height);
  long a = 0;
  while (a == 0) a = num(rng);
  mpq_class q(a, den(rng));
  q.canonicalize();
  return q;
}

PeriodTable PeriodTable::rescaled(std::mt19937_64& rng, long max_height) const {
  PeriodTable t;
  for (const auto& [k, v] : forms)
    t.forms[k] = v.rescaled(random_rational(rng, max_height), random_rational(rng, max_height),
                            random_rational(rng, max_height), random_rational(rng, max_height));
  return t;
}

}  // namespace lval::periods
