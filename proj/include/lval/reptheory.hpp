#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lval::rep {

// Exact element of (1/2)Z, stored as twice its value.
class Half {
 public:
  constexpr Half() = default;
  constexpr Half(long v) : twice_(2 * v) {}  // NOLINT
  static constexpr Half from_twice(long t) {
    Half h;
    h.twice_ = t;
    return h;
  }
  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  long as_integer() const;
  std::string str() const;

  friend constexpr Half operator+(Half a, Half b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr Half operator-(Half a, Half b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr Half operator-(Half a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(Half a, Half b) = default;
  friend constexpr bool operator==(Half a, Half b) = default;

 private:
  long twice_ = 0;
};

using Weight = std::vector<Half>;

std::string weight_str(const Weight& w);
bool is_dominant(const Weight& w);  // weakly decreasing
bool is_pure(const Weight& w);
Weight rho(int n);

struct InfinityType {
  int n = 0;
  std::vector<long> kappa;  // strictly decreasing, length floor(n/2)
  std::vector<long> w;      // length floor((n+1)/2)
  int sign_delta = 0;       // 0 for pi_mu, 1 for pi_mu (x) sgn; n odd only

  bool essentially_tempered() const;
  long scalar_w() const;  // requires essentially tempered
};

void validate(const InfinityType& t);
InfinityType weight_to_infinity_type(const Weight& mu);
Weight infinity_type_to_weight(const InfinityType& t);

int signature(int n, long w_last, bool twisted);
long bottom_degree(int n);

struct KostantResult {
  std::vector<int> perm;  // sorted lambda[i] = lambda[perm[i]]
  Weight lambda;
  Weight mu;
  long length = 0;
  bool length_identity = false;  // length == b_n - sum b_{n_i}
  bool half_sum_identity = false;  // length == (1/2) sum_{i<j} n_i n_j
  bool pattern_holds = false;  // interleaving pattern for every pair of 2-blocks
  bool mu_dominant_integral = false;
};

// Raises std::invalid_argument on repeated lambda entries or non-integral mu.
KostantResult kostant_representative(const std::vector<Weight>& blocks, const std::vector<int>& comp,
                                     const std::vector<Half>& exponents);
// Exponents of the standard parabolic half-sum: a_i = (sum_{j>i} n_j - sum_{j<i} n_j)/2.
std::vector<Half> standard_exponents(const std::vector<int>& comp);

struct HodgeData {
  long weight = 0;
  std::map<std::pair<long, long>, int> types;  // off-diagonal (p,q), p+q = weight, p != q
  int h_plus = 0;
  int h_minus = 0;
  int middle_unsplit = 0;  // middle type whose F_infinity split is not yet known

  int rank() const;
  bool symmetric() const;
  std::string str() const;
};

HodgeData tensor(const HodgeData& a, const HodgeData& b);
HodgeData tate_twist(const HodgeData& h, long k);  // M(k)
HodgeData dual(const HodgeData& h);
HodgeData sym_power_hodge(long kappa, int n);
// delta = 0 puts the unsplit middle into h_plus, delta = 1 into h_minus.
HodgeData with_middle_split(const HodgeData& h, int delta);
HodgeData clozel_hodge(const InfinityType& t);
std::pair<int, int> deligne_dims(int n);

struct GammaShift {
  bool complex = false;  // Gamma_C if true, Gamma_R otherwise
  long shift = 0;        // factor Gamma(s + shift)
};

std::vector<GammaShift> gamma_shifts(const HodgeData& h);
// Integers m where the archimedean factors of M at m and of the dual at 1-m are finite.
// When unbounded the result is clipped to [lo, hi].
std::set<long> critical_points_from_gamma(const HodgeData& h, long lo = -200, long hi = 200);

long distance(const std::vector<long>& kappa, const std::vector<long>& ell, bool ell_odd_degree);
// Unitary-normalization critical set for GL_n x GL_n', n even, both essentially tempered.
std::set<Half> critical_points(const InfinityType& sigma, const InfinityType& pi);
bool has_central_point(const InfinityType& sigma, const InfinityType& pi);
// Integer m for L(M_sigma (x) M_pi, m) corresponding to unitary m0.
long unitary_to_motivic(Half m0, int n, int nprime);

bool is_balanced(const std::vector<long>& kappa, const std::vector<long>& ell);
std::vector<long> blasius_exponents(const std::vector<long>& kappas);

}  // namespace lval::rep
