#include "lval/character.hpp"

#include <numeric>
#include <stdexcept>

namespace lval {

long gcd_long(long a, long b) { return std::gcd(a, b); }

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

int kronecker_symbol(long D, long n) {
  if (n <= 0) throw std::invalid_argument("kronecker_symbol needs n > 0");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    long r = ((D % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (D/n) for odd n
  long a = ((D % n) + n) % n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : modulus_(modulus), phi_(euler_phi(modulus)), exps_(std::move(exponents)) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  if (static_cast<long>(exps_.size()) != modulus_ + (modulus_ == 1 ? 1 : 0))
    throw std::invalid_argument("character table has wrong size");
  for (long a = 0; a < modulus_; ++a) {
    bool unit = std::gcd(a, modulus_) == 1 || modulus_ == 1;
    if (unit != (exps_[a] >= 0)) throw std::invalid_argument("character table support mismatch");
  }
  // multiplicativity
  for (long a = 1; a < modulus_; ++a)
    for (long b = a; b < modulus_; ++b)
      if (exps_[a] >= 0 && exps_[b] >= 0 && exps_[a * b % modulus_] != (exps_[a] + exps_[b]) % phi_)
        throw std::invalid_argument("character table is not multiplicative");
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  std::vector<long> e(modulus + (modulus == 1 ? 1 : 0));
  for (long a = 0; a < static_cast<long>(e.size()); ++a) e[a] = (std::gcd(a, modulus) == 1 || modulus == 1) ? 0 : -1;
  return DirichletCharacter(modulus, e);
}

DirichletCharacter DirichletCharacter::quadratic(long D) {
  long N = std::labs(D);
  if (N <= 1) return trivial(1);
  long ph = euler_phi(N);
  std::vector<long> e(N);
  for (long a = 0; a < N; ++a) {
    int k = kronecker_symbol(D, a == 0 ? N : a);
    if (a == 0) k = 0;
    e[a] = k == 0 ? -1 : (k == 1 ? 0 : ph / 2);
  }
  return DirichletCharacter(N, e);
}

namespace {

long mulmod(long a, long b, long m) { return static_cast<long>((static_cast<__int128>(a) * b) % m); }

long order_mod(long g, long m) {
  long x = g % m, k = 1;
  while (x != 1) {
    x = mulmod(x, g, m);
    ++k;
  }
  return k;
}

struct Component {
  long modulus;      // prime power
  long generator;    // generator of a cyclic factor, lifted by CRT later
  long order;
};

}  // namespace

std::vector<DirichletCharacter> DirichletCharacter::all(long N) {
  if (N == 1) return {trivial(1)};
  // Cyclic decomposition via prime powers.
  std::vector<Component> comps;
  long n = N;
  for (long p = 2; p <= n; ++p) {
    if (n % p) continue;
    long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (p == 2) {
      if (q == 2) continue;
      comps.push_back({q, q - 1, 2});
      if (q >= 8) comps.push_back({q, 5, q / 4});
    } else {
      long ph = q / p * (p - 1);
      for (long g = 2; g < q; ++g)
        if (std::gcd(g, q) == 1 && order_mod(g, q) == ph) {
          comps.push_back({q, g, ph});
          break;
        }
    }
  }
  // Lift each generator to mod N (identity on the other prime powers).
  std::vector<long> gens;
  for (const auto& c : comps) {
    long other = N / c.modulus;
    long x = 0;
    for (long k = 0; k < N; ++k)
      if (k % c.modulus == c.generator % c.modulus && k % other == 1 % other) {
        x = k;
        break;
      }
    gens.push_back(x);
  }
  long ph = euler_phi(N);
  // Discrete logs via enumeration of the product of cyclic subgroups.
  std::vector<std::vector<long>> logs(N);
  std::vector<long> idx(comps.size(), 0);
  for (;;) {
    long a = 1 % N;
    for (std::size_t j = 0; j < comps.size(); ++j)
      for (long r = 0; r < idx[j]; ++r) a = mulmod(a, gens[j], N);
    logs[a] = idx;
    std::size_t j = 0;
    while (j < comps.size() && ++idx[j] == comps[j].order) idx[j++] = 0;
    if (j == comps.size()) break;
  }
  std::vector<DirichletCharacter> out;
  std::vector<long> choice(comps.size(), 0);
  for (;;) {
    std::vector<long> e(N, -1);
    for (long a = 1; a < N; ++a) {
      if (std::gcd(a, N) != 1) continue;
      long s = 0;
      for (std::size_t j = 0; j < comps.size(); ++j) s += choice[j] * logs[a][j] * (ph / comps[j].order);
      e[a] = s % ph;
    }
    out.emplace_back(N, e);
    std::size_t j = 0;
    while (j < comps.size() && ++choice[j] == comps[j].order) choice[j++] = 0;
    if (j == comps.size()) break;
  }
  return out;
}

long DirichletCharacter::order() const {
  long o = 1;
  for (long e : exps_)
    if (e > 0) o = std::lcm(o, phi_ / std::gcd(e, phi_));
  return o;
}

long DirichletCharacter::exponent(long a) const {
  if (modulus_ == 1) return 0;
  long r = ((a % modulus_) + modulus_) % modulus_;
  return exps_[r];
}

Complex DirichletCharacter::value(long a) const {
  long e = exponent(a);
  if (e < 0) return Complex();
  if (e == 0) return Complex(Real(1));
  if (2 * e == phi_) return Complex(Real(-1));
  Real ang = 2 * pi() * Real(e) / Real(phi_);
  return Complex(boost::multiprecision::cos(ang), boost::multiprecision::sin(ang));
}

bool DirichletCharacter::is_real() const { return order() <= 2; }

int DirichletCharacter::real_value(long a) const {
  if (!is_real()) throw std::domain_error("character is not real");
  long e = exponent(a);
  if (e < 0) return 0;
  return e == 0 ? 1 : -1;
}

long DirichletCharacter::conductor() const {
  if (modulus_ == 1) return 1;
  for (long d = 1; d <= modulus_; ++d) {
    if (modulus_ % d) continue;
    bool ok = true;
    for (long a = 1; a < modulus_ && ok; ++a)
      if (std::gcd(a, modulus_) == 1 && a % d == 1 % d) ok = exps_[a] == 0;
    if (ok) return d;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<long> e = exps_;
  for (auto& x : e)
    if (x > 0) x = phi_ - x;
  return DirichletCharacter(modulus_, e);
}

std::string DirichletCharacter::label() const {
  if (modulus_ == 1) return "1";
  if (is_real() && order() == 2)
    for (long D : {modulus_, -modulus_}) {
      try {
        if (quadratic(D) == *this) return "chi" + std::to_string(D);
      } catch (const std::invalid_argument&) {
        // D is not a discriminant with period |D|
      }
    }
  std::string t = "chi" + std::to_string(modulus_) + "[";
  for (long a = 1; a < modulus_; ++a) {
    if (std::gcd(a, modulus_) != 1) continue;
    t += std::to_string(exps_[a]);
    t += a + 1 < modulus_ ? "," : "";
  }
  return t + "]";
}

}  // namespace lval
