#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lval/character.hpp"
#include "lval/exact.hpp"
#include "lval/modforms.hpp"
#include "lval/numeric.hpp"
#include "lval/reptheory.hpp"

namespace lval::lf {

using modforms::Newform;
using modforms::SatakeData;

// Euler factor as a polynomial in T = p^{-s}, constant term 1.
struct LocalFactor {
  long p = 0;
  QPoly coeffs{Quad(1)};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str() const { return poly_str(coeffs); }
  friend bool operator==(const LocalFactor& a, const LocalFactor& b) {
    return a.p == b.p && poly_equal(a.coeffs, b.coeffs);
  }
};

// Power sums p_k = sum of gamma_i^k over the reciprocal roots, k = 1..K.
std::vector<Quad> power_sums(const LocalFactor& f, int K);
// Polynomial prod (1 - gamma_i T) of degree d from its first d power sums.
LocalFactor from_power_sums(long p, const std::vector<Quad>& ps, int d);

LocalFactor hecke_local_factor(const SatakeData& s);
LocalFactor sym_power_local_factor(const SatakeData& s, int n);
LocalFactor tensor_local_factor(const std::vector<SatakeData>& ss);
LocalFactor rankin_selberg_local_factor(const LocalFactor& a, const LocalFactor& b);
// T -> chi(p) T; chi(p) = 0 gives the constant factor.
LocalFactor twist_local_factor(const LocalFactor& f, const Quad& chi_p);
LocalFactor product(const LocalFactor& a, const LocalFactor& b);

struct CGTerm {
  int n = 0;  // Sym^n
  int j = 0;  // twisted by det^j
  LocalFactor factor;
};

// Checks det(1 - Sym^a (x) Sym^b T) = prod_j det(1 - Sym^{a+b-2j} det^j T) exactly.
// Raises std::logic_error on mismatch.
std::vector<CGTerm> clebsch_gordan_identity(int a, int b, const SatakeData& s);

// Satake data with the exact fields only; alpha and beta are left zero.
SatakeData exact_satake(const Newform& f, long p);

struct Pole {
  long at = 0;
  long residue = 0;  // residue of the completed function
};

struct LSeriesSpec {
  std::string key;
  int degree = 1;
  long weight = 0;  // functional equation s <-> weight + 1 - s
  long conductor = 1;
  std::vector<rep::GammaShift> gamma;
  std::function<LocalFactor(long)> local_factor;
  bool self_dual = true;
  long disc = 1;      // field of the Dirichlet coefficients
  int embedding = 1;  // real embedding of sqrt(disc)
  std::vector<Pole> poles;
  std::optional<int> root_number;
  long bad_prime_product = 1;  // primes dividing the conductor

  long k() const { return weight + 1; }
};

// Raises std::invalid_argument when the gamma multiset does not match the degree.
void validate_spec(const LSeriesSpec& spec);
int gamma_degree(const std::vector<rep::GammaShift>& g);

std::vector<rep::GammaShift> archimedean_factor(const rep::HodgeData& h);

LSeriesSpec zeta_spec();
// zeta(s - j), motivic weight 2j.
LSeriesSpec shifted_zeta_spec(long j);
LSeriesSpec hecke_spec(const Newform& f, int embedding = 1);
// delta in {0,1} fixes the middle Gamma_R shift for even n; ignored for odd n.
LSeriesSpec sym_power_spec(const Newform& f, int n, int delta, int embedding = 1);
LSeriesSpec rankin_selberg_spec(const Newform& f, const Newform& g, int embedding = 1);
// f (x) chi for a real primitive character; conductor chi.modulus()^2.
LSeriesSpec twisted_hecke_spec(const Newform& f, const DirichletCharacter& chi, int embedding = 1);

struct CoefficientTable {
  std::string key;
  long disc = 1;
  std::vector<Quad> a;  // a[0] unused

  std::size_t size() const { return a.empty() ? 0 : a.size() - 1; }
  const Quad& operator[](std::size_t n) const { return a.at(n); }
  friend bool operator==(const CoefficientTable& x, const CoefficientTable& y) {
    return x.key == y.key && x.disc == y.disc && x.a == y.a;
  }
};

CoefficientTable dirichlet_coefficients(const LSeriesSpec& spec, std::size_t N);

class InsufficientCoefficients : public std::runtime_error {
 public:
  InsufficientCoefficients(std::size_t have, std::size_t need)
      : std::runtime_error("coefficient table has " + std::to_string(have) + " terms, " + std::to_string(need) +
                           " required"),
        have_(have),
        need_(need) {}
  std::size_t have() const { return have_; }
  std::size_t need() const { return need_; }

 private:
  std::size_t have_, need_;
};

class RootNumberError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalResult {
  Complex value;       // L(s)
  Real error_bound;    // absolute, on value
  Complex completed;   // Lambda(s)
  Real completed_error;
  int working_digits = 0;
  std::size_t terms_used = 0;
  long nodes = 0;
};

struct LineData;

// Completed L-function evaluator by a contour integral on a vertical line, folded through
// the functional equation.
class LFunction {
 public:
  LFunction(LSeriesSpec spec, CoefficientTable coeffs, int digits);
  ~LFunction();
  LFunction(LFunction&&) noexcept;
  LFunction& operator=(LFunction&&) noexcept;

  const LSeriesSpec& spec() const { return spec_; }
  const CoefficientTable& coefficients() const { return coeffs_; }
  int digits() const { return digits_; }
  void set_digits(int d) { digits_ = d; }
  static constexpr int kGuardDigits = 15;

  // q^{s/2} times the gamma product, at the current precision.
  Complex gamma_factor(const Complex& s) const;
  // Number of coefficients needed for s at the current digits.
  std::size_t required_terms(const Complex& s) const;

  // Pieces with Lambda(s) = first + eps * second + polar(s, t).
  struct Split {
    Complex direct, dual, polar;
    Real bound_direct, bound_dual;
    int working_digits = 0;
    std::size_t terms = 0;
    long nodes = 0;
  };
  Split split(const Complex& s, double t);
  // As split, with the absolute error target scaled to exp(scale_log).
  Split split_at_scale(const Complex& s, double t, double scale_log);

  Complex completed(const Complex& s, double t = 1.0);
  EvalResult evaluate(const Complex& s);

  int root_number();  // solves when unknown
  void set_root_number(int eps) { spec_.root_number = eps; }

 private:
  std::shared_ptr<LineData> line_for(const Complex& s, double t, double target_scale_log);

  LSeriesSpec spec_;
  CoefficientTable coeffs_;
  std::vector<double> abs_coeffs_;
  int digits_;
  std::vector<std::shared_ptr<LineData>> lines_;
};

// Solves Lambda(s) = eps Lambda(k - s) using two cut-off parameters at several points.
// Throws RootNumberError when the estimates disagree.
std::complex<double> solve_root_number(LFunction& L, int test_points = 3);

struct FECheck {
  Real max_residual;
  int root_number = 0;
  std::vector<Complex> points;
};
FECheck fe_selfcheck(LFunction& L, int samples, unsigned seed = 1);

// Tries both middle Gamma_R shifts and returns the delta whose functional equation holds.
int resolve_middle_split(const Newform& f, int n, int digits, Real* residual = nullptr);

}  // namespace lval::lf
