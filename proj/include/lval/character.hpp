#pragma once

#include <string>
#include <vector>

#include "lval/numeric.hpp"

namespace lval {

// Dirichlet character mod N. Values are stored as exponents k of exp(2 pi i k / phi(N)),
// or -1 where gcd(a, N) > 1.
class DirichletCharacter {
 public:
  DirichletCharacter() : DirichletCharacter(1, {0, 0}) {}
  DirichletCharacter(long modulus, std::vector<long> exponents);

  static DirichletCharacter trivial(long modulus = 1);
  // Kronecker symbol (D/.) for a fundamental discriminant D; modulus |D|.
  static DirichletCharacter quadratic(long D);
  // All characters mod N, in a fixed deterministic order.
  static std::vector<DirichletCharacter> all(long modulus);

  long modulus() const { return modulus_; }
  long order() const;
  long phi() const { return phi_; }
  long exponent(long a) const;  // -1 when not coprime
  Complex value(long a) const;
  // Exact value when the character is real: -1, 0 or 1.
  int real_value(long a) const;
  bool is_real() const;
  bool is_even() const { return exponent(modulus_ - 1) == 0 || modulus_ <= 2; }
  long conductor() const;
  bool is_primitive() const { return conductor() == modulus_; }
  DirichletCharacter conj() const;
  std::string label() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.exps_ == b.exps_;
  }

 private:
  long modulus_;
  long phi_;
  std::vector<long> exps_;  // index a mod N
};

long euler_phi(long n);
long gcd_long(long a, long b);
int kronecker_symbol(long D, long n);

}  // namespace lval
