#include "lval/reptheory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lval::rep {

long Half::as_integer() const {
  if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not integral");
  return twice_ / 2;
}

std::string Half::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].str();
  }
  return s + ")";
}

bool is_dominant(const Weight& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

bool is_pure(const Weight& w) {
  std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] + w[n - 1 - i] != w[0] + w[n - 1]) return false;
  return true;
}

Weight rho(int n) {
  Weight r;
  for (int i = 0; i < n; ++i) r.push_back(Half::from_twice(n - 1 - 2 * i));
  return r;
}

bool InfinityType::essentially_tempered() const {
  for (long x : w)
    if (x != w.front()) return false;
  return true;
}

long InfinityType::scalar_w() const {
  if (w.empty() || !essentially_tempered()) throw std::invalid_argument("infinity type is not essentially tempered");
  return w.front();
}

void validate(const InfinityType& t) {
  int r = t.n / 2;
  if (t.n < 1) throw std::invalid_argument("degree must be positive");
  if (static_cast<int>(t.kappa.size()) != r || static_cast<int>(t.w.size()) != (t.n + 1) / 2)
    throw std::invalid_argument("infinity type has wrong tuple lengths");
  for (int i = 0; i < r; ++i) {
    if (t.kappa[i] < 2) throw std::invalid_argument("kappa entries must be >= 2");
    if (i > 0 && t.kappa[i] >= t.kappa[i - 1]) throw std::invalid_argument("kappa must be strictly decreasing");
    if (((t.kappa[i] - t.w[i] - t.n) % 2 + 2) % 2 != 0) throw std::invalid_argument("parity condition violated");
  }
  if (t.n % 2 == 1 && t.w[r] % 2 != 0) throw std::invalid_argument("middle w must be even");
  if (t.n % 2 == 0 && t.sign_delta != 0) throw std::invalid_argument("sign twist only for odd degree");
}

InfinityType weight_to_infinity_type(const Weight& mu) {
  int n = static_cast<int>(mu.size());
  if (n == 0) throw std::invalid_argument("empty weight");
  Weight rh = rho(n);
  Weight lam(n);
  for (int i = 0; i < n; ++i) {
    if (!mu[i].is_integer()) throw std::invalid_argument("parity condition violated: weight not integral");
    lam[i] = mu[i] + rh[i];
  }
  InfinityType t;
  t.n = n;
  int r = n / 2;
  for (int i = 0; i < r; ++i) {
    Half k = lam[i] - lam[n - 1 - i] + Half(1);
    Half w = -(lam[i] + lam[n - 1 - i]);
    t.kappa.push_back(k.as_integer());
    t.w.push_back(w.as_integer());
  }
  if (n % 2 == 1) t.w.push_back((-(lam[r] + lam[r])).as_integer());
  try {
    validate(t);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("non-cohomological weight: ") + e.what());
  }
  return t;
}

Weight infinity_type_to_weight(const InfinityType& t) {
  validate(t);
  int n = t.n, r = n / 2;
  Weight lam(n);
  for (int i = 0; i < r; ++i) {
    lam[i] = Half::from_twice(t.kappa[i] - 1 - t.w[i]);
    lam[n - 1 - i] = Half::from_twice(1 - t.kappa[i] - t.w[i]);
  }
  if (n % 2 == 1) lam[r] = Half::from_twice(-t.w[r]);
  Weight rh = rho(n);
  Weight mu(n);
  for (int i = 0; i < n; ++i) mu[i] = lam[i] - rh[i];
  return mu;
}

int signature(int n, long w_last, bool twisted) {
  if (n % 2 == 0) throw std::invalid_argument("signature is defined for odd n only");
  if (w_last % 2 != 0) throw std::invalid_argument("w_{r+1} must be even");
  long e = n / 2 + w_last / 2 + (twisted ? 1 : 0);
  return (e % 2 == 0) ? 1 : -1;
}

long bottom_degree(int n) { return static_cast<long>(n) * n / 4; }

std::vector<Half> standard_exponents(const std::vector<int>& comp) {
  std::vector<Half> a;
  int before = 0;
  int total = std::accumulate(comp.begin(), comp.end(), 0);
  for (int ni : comp) {
    int after = total - before - ni;
    a.push_back(Half::from_twice(after - before));
    before += ni;
  }
  return a;
}

KostantResult kostant_representative(const std::vector<Weight>& blocks, const std::vector<int>& comp,
                                     const std::vector<Half>& exponents) {
  if (blocks.size() != comp.size() || exponents.size() != comp.size())
    throw std::invalid_argument("blocks, composition and exponents differ in length");
  int n = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    if (comp[i] < 1 || static_cast<int>(blocks[i].size()) != comp[i])
      throw std::invalid_argument("block size does not match composition");
    if (!is_dominant(blocks[i])) throw std::invalid_argument("block weight is not dominant");
    n += comp[i];
  }
  KostantResult res;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    Weight rh = rho(comp[i]);
    for (int j = 0; j < comp[i]; ++j) res.lambda.push_back(blocks[i][j] + rh[j] + exponents[i]);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return res.lambda[a] > res.lambda[b]; });
  for (int i = 1; i < n; ++i)
    if (res.lambda[perm[i]] == res.lambda[perm[i - 1]])
      throw std::invalid_argument("repeated entries in lambda " + weight_str(res.lambda));
  res.perm = perm;
  Weight rh = rho(n);
  bool integral = true;
  for (int i = 0; i < n; ++i) {
    res.mu.push_back(res.lambda[perm[i]] - rh[i]);
    integral = integral && res.mu.back().is_integer();
  }
  if (!integral) throw std::invalid_argument("non-integral mu " + weight_str(res.mu));
  res.mu_dominant_integral = is_dominant(res.mu);
  long inv = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (res.lambda[a] < res.lambda[b]) ++inv;
  res.length = inv;
  long bsum = 0, pairs = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    bsum += bottom_degree(comp[i]);
    for (std::size_t j = i + 1; j < comp.size(); ++j) pairs += static_cast<long>(comp[i]) * comp[j];
  }
  res.length_identity = inv == bottom_degree(n) - bsum;
  res.half_sum_identity = 2 * inv == pairs;

  // Interleaving pattern between every pair of blocks.
  std::vector<int> start;
  int acc = 0;
  int odd_blocks = 0;
  for (int ni : comp) {
    start.push_back(acc);
    acc += ni;
    odd_blocks += ni % 2;
  }
  bool pattern = odd_blocks <= 1;
  auto L = [&](std::size_t blk, int idx) { return res.lambda[start[blk] + idx]; };
  for (std::size_t i = 0; i < comp.size() && pattern; ++i) {
    for (std::size_t j = i + 1; j < comp.size() && pattern; ++j) {
      int ri = comp[i] / 2, rj = comp[j] / 2;
      for (int al = 0; al < ri && pattern; ++al) {
        Half xi = L(i, al), yi = L(i, comp[i] - 1 - al);
        for (int be = 0; be < rj && pattern; ++be) {
          Half xj = L(j, be), yj = L(j, comp[j] - 1 - be);
          Half ki = xi - yi, kj = xj - yj;
          if (ki > kj)
            pattern = xi > xj && xj > yj && yj > yi;
          else if (kj > ki)
            pattern = xj > xi && xi > yi && yi > yj;
          else
            pattern = false;
        }
      }
      if (comp[i] % 2 == 1) {
        Half m = L(i, comp[i] / 2);
        for (int be = 0; be < rj && pattern; ++be) pattern = L(j, be) > m && m > L(j, comp[j] - 1 - be);
      }
      if (comp[j] % 2 == 1) {
        Half m = L(j, comp[j] / 2);
        for (int al = 0; al < ri && pattern; ++al) pattern = L(i, al) > m && m > L(i, comp[i] - 1 - al);
      }
    }
  }
  res.pattern_holds = pattern;
  return res;
}

int HodgeData::rank() const {
  int r = h_plus + h_minus + middle_unsplit;
  for (const auto& [pq, m] : types) r += m;
  return r;
}

bool HodgeData::symmetric() const {
  for (const auto& [pq, m] : types) {
    auto it = types.find({pq.second, pq.first});
    if (it == types.end() || it->second != m) return false;
    if (pq.first + pq.second != weight) return false;
  }
  return true;
}

std::string HodgeData::str() const {
  std::ostringstream os;
  os << "w=" << weight << " {";
  bool first = true;
  for (const auto& [pq, m] : types) {
    os << (first ? "" : ", ") << "(" << pq.first << "," << pq.second << ")";
    if (m != 1) os << "^" << m;
    first = false;
  }
  if (h_plus) os << (first ? "" : ", ") << "mid+^" << h_plus, first = false;
  if (h_minus) os << (first ? "" : ", ") << "mid-^" << h_minus, first = false;
  if (middle_unsplit) os << (first ? "" : ", ") << "mid?^" << middle_unsplit;
  os << "}";
  return os.str();
}

HodgeData tensor(const HodgeData& a, const HodgeData& b) {
  if (a.middle_unsplit || b.middle_unsplit) throw std::invalid_argument("tensor needs split middle types");
  HodgeData r;
  r.weight = a.weight + b.weight;
  int diag_pairs = 0;
  auto add = [&](long p, long q, int m) {
    if (p == q)
      diag_pairs += m;
    else
      r.types[{p, q}] += m;
  };
  for (const auto& [pa, ma] : a.types)
    for (const auto& [pb, mb] : b.types) add(pa.first + pb.first, pa.second + pb.second, ma * mb);
  if (a.weight % 2 == 0) {
    long ha = a.weight / 2;
    for (const auto& [pb, mb] : b.types) add(ha + pb.first, ha + pb.second, (a.h_plus + a.h_minus) * mb);
  }
  if (b.weight % 2 == 0) {
    long hb = b.weight / 2;
    for (const auto& [pa, ma] : a.types) add(pa.first + hb, pa.second + hb, (b.h_plus + b.h_minus) * ma);
  }
  if (diag_pairs % 2) throw std::logic_error("unpaired middle Hodge type");
  r.h_plus = diag_pairs / 2 + a.h_plus * b.h_plus + a.h_minus * b.h_minus;
  r.h_minus = diag_pairs / 2 + a.h_plus * b.h_minus + a.h_minus * b.h_plus;
  return r;
}

HodgeData tate_twist(const HodgeData& h, long k) {
  HodgeData r;
  r.weight = h.weight - 2 * k;
  for (const auto& [pq, m] : h.types) r.types[{pq.first - k, pq.second - k}] = m;
  // Middle labels are relative to (-1)^{w/2}, so a Tate twist keeps them.
  r.h_plus = h.h_plus;
  r.h_minus = h.h_minus;
  r.middle_unsplit = h.middle_unsplit;
  return r;
}

HodgeData dual(const HodgeData& h) {
  HodgeData r;
  r.weight = -h.weight;
  for (const auto& [pq, m] : h.types) r.types[{-pq.second, -pq.first}] = m;
  r.h_plus = h.h_plus;
  r.h_minus = h.h_minus;
  r.middle_unsplit = h.middle_unsplit;
  return r;
}

HodgeData sym_power_hodge(long kappa, int n) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  HodgeData h;
  h.weight = n * (kappa - 1);
  for (int i = 0; i <= n; ++i) {
    long p = i * (kappa - 1), q = (n - i) * (kappa - 1);
    if (p == q)
      h.middle_unsplit += 1;
    else
      h.types[{p, q}] += 1;
  }
  if (n == 0) {
    h.middle_unsplit = 0;
    h.h_plus = 1;
  }
  return h;
}

HodgeData with_middle_split(const HodgeData& h, int delta) {
  HodgeData r = h;
  if (delta == 0)
    r.h_plus += r.middle_unsplit;
  else
    r.h_minus += r.middle_unsplit;
  r.middle_unsplit = 0;
  return r;
}

HodgeData clozel_hodge(const InfinityType& t) {
  validate(t);
  long w = t.scalar_w();
  long n = t.n;
  HodgeData h;
  h.weight = -w - n + 1;
  for (long k : t.kappa) {
    long p = (-k - w - n + 2), q = (k - w - n);
    if (p % 2 || q % 2) throw std::logic_error("non-integral Hodge type");
    h.types[{p / 2, q / 2}] += 1;
    h.types[{q / 2, p / 2}] += 1;
  }
  if (n % 2 == 1) {
    if (t.sign_delta == 0)
      h.h_plus = 1;
    else
      h.h_minus = 1;
  }
  return h;
}

std::pair<int, int> deligne_dims(int n) {
  if (n < 0) throw std::invalid_argument("negative symmetric power");
  if (n % 2 == 0) return {n / 2 + 1, n / 2};
  return {(n + 1) / 2, (n + 1) / 2};
}

std::vector<GammaShift> gamma_shifts(const HodgeData& h) {
  if (h.middle_unsplit) throw std::invalid_argument("middle F_infinity split unresolved");
  std::vector<GammaShift> g;
  for (const auto& [pq, m] : h.types)
    if (2 * pq.first < h.weight)
      for (int i = 0; i < m; ++i) g.push_back({true, -pq.first});
  if (h.h_plus || h.h_minus) {
    if (h.weight % 2) throw std::logic_error("middle type in odd weight");
    long half = h.weight / 2;
    for (int i = 0; i < h.h_plus; ++i) g.push_back({false, -half});
    for (int i = 0; i < h.h_minus; ++i) g.push_back({false, -half + 1});
  }
  return g;
}

namespace {

bool has_pole(const std::vector<GammaShift>& g, long s) {
  for (const auto& f : g) {
    long z = s + f.shift;
    if (z > 0) continue;
    if (f.complex || (-z) % 2 == 0) return true;
  }
  return false;
}

}  // namespace

std::set<long> critical_points_from_gamma(const HodgeData& h, long lo, long hi) {
  auto g = gamma_shifts(h);
  auto gd = gamma_shifts(dual(h));
  std::set<long> out;
  for (long m = lo; m <= hi; ++m)
    if (!has_pole(g, m) && !has_pole(gd, 1 - m)) out.insert(m);
  return out;
}

long distance(const std::vector<long>& kappa, const std::vector<long>& ell, bool ell_odd_degree) {
  long d = -1;
  auto upd = [&](long v) {
    if (d < 0 || v < d) d = v;
  };
  for (long k : kappa) {
    for (long l : ell) upd(std::labs(k - l));
    if (ell_odd_degree) upd(std::labs(k - 1));
  }
  if (d < 0) throw std::invalid_argument("distance needs nonempty kappa");
  return d;
}

std::set<Half> critical_points(const InfinityType& sigma, const InfinityType& pi) {
  if (sigma.n % 2) throw std::invalid_argument("critical_points needs n even");
  validate(sigma);
  validate(pi);
  long w = sigma.scalar_w(), u = pi.scalar_w();
  long d = distance(sigma.kappa, pi.kappa, pi.n % 2 == 1);
  std::set<Half> out;
  if (d < 1) return out;
  // m0 in Z + n'/2 with 2-w-u-d <= 2 m0 <= -w-u+d
  long lo2 = 2 - w - u - d, hi2 = -w - u + d;
  for (long t = lo2; t <= hi2; ++t)
    if (((t - pi.n) % 2 + 2) % 2 == 0) out.insert(Half::from_twice(t));
  return out;
}

bool has_central_point(const InfinityType& sigma, const InfinityType& pi) {
  long d = distance(sigma.kappa, pi.kappa, pi.n % 2 == 1);
  long s = sigma.scalar_w() + pi.scalar_w() - (sigma.n + pi.n + 1);
  return d >= 1 && (s % 2 + 2) % 2 == 0;
}

long unitary_to_motivic(Half m0, int n, int nprime) {
  return (m0 - Half::from_twice(n + nprime) + Half(1)).as_integer();
}

bool is_balanced(const std::vector<long>& kappa, const std::vector<long>& ell) {
  if (kappa.empty()) return false;
  if (ell.size() != kappa.size() && ell.size() + 1 != kappa.size()) return false;
  std::vector<long> seq;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    seq.push_back(kappa[i]);
    if (i < ell.size()) seq.push_back(ell[i]);
  }
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!(seq[i - 1] > seq[i])) return false;
  return true;
}

std::vector<long> blasius_exponents(const std::vector<long>& kappas) {
  std::size_t n = kappas.size();
  if (n < 2) throw std::invalid_argument("blasius_exponents needs n >= 2");
  std::vector<long> t(n, 0);
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    long total = 0;
    for (std::size_t j = 0; j < n; ++j) total += ((mask >> j) & 1 ? 1 : -1) * (kappas[j] - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (((mask >> i) & 1) && 2 * (kappas[i] - 1) < total) ++t[i];
  }
  return t;
}

}  // namespace lval::rep
