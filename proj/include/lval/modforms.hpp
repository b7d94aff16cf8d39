#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "lval/exact.hpp"
#include "lval/numeric.hpp"

namespace lval::modforms {

// Truncated q-series sum_{n<=N} a_n q^n with exact coefficients.
class QExpansion {
 public:
  QExpansion() = default;
  QExpansion(int weight, std::vector<Quad> coeffs);

  int weight() const { return weight_; }
  std::size_t truncation() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const Quad& operator[](std::size_t n) const;
  const std::vector<Quad>& coeffs() const { return coeffs_; }
  long disc() const;

  QExpansion truncated(std::size_t n) const;
  QExpansion scaled(const Quad& c) const;
  QExpansion conj() const;

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend bool operator==(const QExpansion& a, const QExpansion& b);

 private:
  int weight_ = 0;
  std::vector<Quad> coeffs_;
};

struct Newform {
  int weight = 0;
  int level = 1;
  long hecke_field_disc = 1;
  std::string label;
  QExpansion qexp;

  const Quad& a(std::size_t n) const { return qexp[n]; }
  std::size_t truncation() const { return qexp.truncation(); }
  Newform conj() const;
};

struct SatakeData {
  long p = 0;
  Complex alpha;
  Complex beta;
  Quad a_p;
  mpz_class det;
};

QExpansion eisenstein_qexp(int k, std::size_t nterms);
QExpansion delta_qexp(std::size_t nterms);

int cusp_dimension(int kappa);
// Basis Delta^a E4^b E6^c (c in {0,1}, a >= 1), ordered by a; element i is q^{i+1} + O(q^{i+2}).
std::vector<QExpansion> cusp_basis(int kappa, std::size_t nterms);

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Column j holds T_p applied to basis element j, expressed in the basis.
IntMatrix hecke_matrix(const std::vector<QExpansion>& basis, long p);
IntMatrix hecke_operator_matrix(int kappa, long p, std::size_t basis_size);

Newform level_one_eigenform(int kappa, std::size_t nterms);
// First form has a_2 = 540 + 12 sqrt(144169); the second is its conjugate.
std::pair<Newform, Newform> eigenform_pair_weight24(std::size_t nterms);

// Satake parameters at the current precision; sign selects the real embedding of sqrt(D).
SatakeData satake(const Newform& f, long p, int sign = 1);

struct PeterssonResult {
  Real value;         // divided by vol = pi/3
  Real unnormalized;  // integral of |f|^2 y^(k-2) over the fundamental domain
  Real error_bound;   // on the normalized value
  int nodes = 0;
  std::size_t terms_used = 0;
};

// Raises std::runtime_error if the retained coefficients cannot reach the requested digits.
PeterssonResult petersson_norm(const Newform& f, int digits, int sign = 1);

// Smallest number of q-terms petersson_norm consumes at this precision.
std::size_t petersson_terms_needed(int kappa, int digits);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);

}  // namespace lval::modforms
