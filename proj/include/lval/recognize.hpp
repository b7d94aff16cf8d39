#pragma once

#include <gmpxx.h>

#include <string>

#include "lval/numeric.hpp"

namespace lval::recognize {

enum class Kind { rational, quadratic, unrecognized };

struct Recognition {
  Kind kind = Kind::unrecognized;
  mpq_class x = 0;  // rational part
  mpq_class y = 0;  // coefficient of sqrt(disc)
  long disc = 1;
  Real residual;    // |input - recognized value| at working precision
  Real gap;         // distance to the nearest competing candidate
  mpz_class height = 0;

  bool accepted() const { return kind != Kind::unrecognized; }
  Real value() const;
  std::string str() const;
  friend bool operator==(const Recognition& a, const Recognition& b);
};

// Candidate must clear its gap by this many orders of magnitude.
inline constexpr double kDefaultGapOrders = 8.0;

// Continued-fraction reconstruction. The first convergent whose residual is below
// 10^{-gap_orders} / (q H) (the spacing of fractions of height <= H) is the candidate;
// it is accepted when its residual is also below tol.
Recognition recognize_rational(const Complex& z, const mpz_class& max_height, const Real& tol,
                               double gap_orders = kDefaultGapOrders);

// Integer relation a + b sqrt(D) - c z = 0 by LLL on a 3-dimensional lattice; x = a/c, y = b/c.
// The gap is the residual scaled by the length ratio of the next reduced lattice vector to the
// relation vector.
Recognition recognize_quadratic(const Complex& z, long D, const mpz_class& coeff_bound, const Real& tol,
                                double gap_orders = kDefaultGapOrders);

// True iff z = x + y sqrt(D) and z_sigma = x - y sqrt(D) are both recognized.
bool galois_conjugate_check(const Complex& z, const Complex& z_sigma, long D, const mpz_class& coeff_bound,
                            const Real& tol);

}  // namespace lval::recognize
