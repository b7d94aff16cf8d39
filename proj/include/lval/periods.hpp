#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "lval/character.hpp"
#include "lval/lfunctions.hpp"
#include "lval/modforms.hpp"
#include "lval/numeric.hpp"

namespace lval::periods {

using modforms::Newform;

// Classical sum over a mod N of chi(a) exp(2 pi i a / N). Raises std::invalid_argument for
// imprimitive characters.
Complex gauss_sum(const DirichletCharacter& chi);

// One factor base^exponent of a period expression.
struct PeriodFactor {
  std::string symbol;
  long exponent = 0;
  Complex base;
};

// Product of factors; value is the ordered product, replay() recomputes it.
struct PeriodExpr {
  std::string formula;
  std::vector<PeriodFactor> factors;
  Complex value;

  Complex replay() const;
  // Exponent of the factor with the given symbol, summed; 0 when absent.
  long exponent_of(const std::string& symbol) const;
  std::string audit() const;
};

PeriodExpr make_expr(std::string formula, std::vector<PeriodFactor> factors);

// Building blocks for one embedding of one form.
struct FormPeriods {
  std::string label;
  int weight = 0;
  int embedding = 1;
  Complex c_plus, c_minus;
  int m_plus = 0, m_minus = 0;  // critical points defining c+ and c-
  Complex delta;
  Real petersson;  // divided by vol = pi/3
  Real petersson_error;
  Complex gauss_omega{Real(1)};

  const Complex& c(int sign) const { return sign > 0 ? c_plus : c_minus; }
  // Rescales c+, c-, delta and the Petersson norm by rationals.
  FormPeriods rescaled(const mpq_class& qp, const mpq_class& qm, const mpq_class& qd, const mpq_class& qn) const;
};

// (2 pi i)^{1 - k} G(omega); omega is trivial at level 1.
Complex delta_period(int weight);

// c^eps = L(m_eps, f) / (2 pi i)^{m_eps} for the smallest critical m_eps of parity eps whose value
// clears the noise. Raises std::runtime_error when every candidate vanishes numerically.
void canonical_c_pm(lf::LFunction& L, int weight, FormPeriods& out);

// Full building-block table; the Petersson norm uses quadrature.
FormPeriods form_periods(const Newform& f, int digits, int embedding = 1);

// Deligne periods c^{sign}(Sym^n f) of the symmetric power motive.
PeriodExpr sym_period(const FormPeriods& f, int n, int sign);
// Blasius period c(f_1 (x) ... (x) f_n), n >= 2.
PeriodExpr tensor_period(const std::vector<FormPeriods>& forms);
// q^{sign}(Sigma x Pi) for GL_n x GL_2; omega_sign = omega_{Sigma,infinity}(-1).
PeriodExpr gl_n_gl2_period(int n, long w, const Complex& gauss_omega_sigma, int omega_sign,
                           const FormPeriods& pi, int sign);
// c^{sign}(M_Pi) obtained from c^{sign'}(M_f) by the classical-unitary adapter; w is the
// unitary weight of Pi.
PeriodExpr unitary_c(const FormPeriods& f, long w, int sign);
// q^{sign}(Sym^n Pi) for the unitary normalization with weight w.
PeriodExpr sym_q_period(const FormPeriods& f, int n, long w, int sign);

// Gamma(k) / ((4 pi)^k pi) L(Sym^2 f, k); the unnormalized Petersson norm is a constant times this.
Real sym2_petersson_kernel(const Newform& f, int digits, int embedding = 1);
// Normalized Petersson norm from the Sym^2 route with the fitted constant.
Real petersson_via_sym2(const Newform& f, int digits, const mpq_class& constant, int embedding = 1);

struct PeriodTable {
  std::map<std::string, FormPeriods> forms;

  const FormPeriods& at(const std::string& label) const { return forms.at(label); }
  // Every entry rescaled by rationals of height <= max_height.
  PeriodTable rescaled(std::mt19937_64& rng, long max_height) const;
};

mpq_class random_rational(std::mt19937_64& rng, long max_height);

}  // namespace lval::periods
