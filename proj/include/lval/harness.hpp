#pragma once

#include <gmpxx.h>

#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lval/lfunctions.hpp"
#include "lval/periods.hpp"
#include "lval/recognize.hpp"
#include "lval/reptheory.hpp"

namespace lval::harness {

using nlohmann::json;
using periods::FormPeriods;

struct Config {
  int digits = 40;
  std::string cache_dir;  // empty disables the on-disk cache
  std::size_t coeff_cap = 1000000;
  std::string json_path;
  std::string tol = "1e-25";
  std::string max_height;  // empty: derived from digits
  bool try_central = false;

  Real tolerance() const;
  // Explicit bound, else 10^{(digits - 8) / 2}.
  mpz_class height_bound() const;
};

// Keys: digits, cache_dir, coeff_cap, tol, max_height, try_central. Unknown keys raise
// std::invalid_argument.
void apply_config_file(Config& cfg, const std::string& path);
// LVAL_CACHE_DIR replaces cache_dir when set.
void apply_environment(Config& cfg);
json config_json(const Config& cfg);

enum class Verdict { verified, inconclusive_zero, unrecognized, error };
std::string verdict_str(Verdict v);

struct VerificationReport {
  std::string target;  // A, B, 1.1, 5.10, 5.12, FE
  std::vector<std::string> forms;
  long m = 0;
  Complex lvalue;
  Real lvalue_error = 0;
  Complex period;
  std::string period_audit;
  Complex ratio;
  Real ratio_error = 0;
  recognize::Recognition recognition;
  Verdict verdict = Verdict::error;
  int digits = 0;
  double wall_seconds = 0;
  std::string note;
};

// Scientific decimal string with the given significant digits.
std::string decimal(const Real& x, int digits);
json to_json(const VerificationReport& r);
json run_document(const std::vector<VerificationReport>& runs, const Config& cfg);

// verified iff recognized and ratio_error < tol / 100.
Verdict decide(const recognize::Recognition& rec, const Real& ratio_error, const Real& tol);

struct CacheEntry {
  std::string key;
  int degree = 1;
  long weight = 0;
  lf::CoefficientTable table;
};

void write_cache_entry(std::ostream& os, const CacheEntry& e);
// Raises std::runtime_error on a malformed or unversioned file.
CacheEntry read_cache_entry(std::istream& is);

class CoefficientCache {
 public:
  explicit CoefficientCache(std::string dir);
  const std::string& dir() const { return dir_; }
  std::string path_for(const std::string& key) const;
  std::optional<CacheEntry> load(const std::string& key) const;
  void store(const CacheEntry& e) const;
  // Cached table truncated to N terms, or computed and stored when missing or too short.
  lf::CoefficientTable get(const lf::LSeriesSpec& spec, std::size_t N);

 private:
  std::mutex& lock_for(const std::string& key);

  std::string dir_;
  std::mutex map_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

// Spec built from a form truncated to the given number of terms.
using SpecBuilder = std::function<lf::LSeriesSpec(std::size_t)>;

// Forms, coefficient tables and period tables shared by the drivers.
class Session {
 public:
  explicit Session(Config cfg);
  const Config& config() const { return cfg_; }

  // Level one; weight 24 returns the form with a_2 = 540 + 12 sqrt(144169).
  const modforms::Newform& form(int weight, std::size_t nterms);
  // Evaluator with enough coefficients for every point at the configured digits.
  lf::LFunction lfunction(const SpecBuilder& make, const std::vector<Complex>& points);
  lf::LFunction lfunction(const SpecBuilder& make, const std::vector<Complex>& points, int digits);
  const FormPeriods& periods(int weight);

 private:
  Config cfg_;
  std::optional<CoefficientCache> cache_;
  std::map<int, modforms::Newform> forms_;
  std::map<int, FormPeriods> periods_;
};

// Specs addressed by id: zeta, hecke@k, sym<n>@k, rs@a,b, twist@k:D; a trailing '-' selects
// the conjugate embedding.
SpecBuilder spec_builder(Session& s, const std::string& id);

struct SymEvaluation {
  int weight = 0;
  int n = 0;
  int delta = 0;
  std::string key;
  std::vector<long> points;
  std::vector<lf::EvalResult> values;
  std::vector<double> seconds;
};

// Critical points of Sym^n of the level-one form of the given weight.
std::vector<long> sym_critical_points(int weight, int n, int delta);
long motivic_weight_sym(int weight, int n);

// Raises std::invalid_argument for n outside 1..4, digits > 100 or a point that is not critical.
SymEvaluation evaluate_sym(Session& s, int weight, int n, const std::vector<long>& ms);
std::vector<VerificationReport> judge_sym(const SymEvaluation& ev, const FormPeriods& p, const Config& cfg);
std::vector<VerificationReport> cmd_verify_sym(Session& s, int weight, int n, const std::vector<long>& ms);

struct TensorEvaluation {
  std::vector<int> weights;
  std::vector<long> points;
  std::vector<lf::EvalResult> values;
  std::vector<double> seconds;
};

TensorEvaluation evaluate_tensor(Session& s, const std::vector<int>& weights, const std::vector<long>& ms);
std::vector<VerificationReport> judge_tensor(const TensorEvaluation& ev, const std::vector<FormPeriods>& p,
                                             const Config& cfg);
// Equal weights have no critical points; the reports then compare the Rankin-Selberg Dirichlet
// series with the Clebsch-Gordan product L(Sym^2 f, s) zeta(s - k + 1) at real points.
std::vector<VerificationReport> cmd_verify_tensor(Session& s, const std::vector<int>& weights,
                                                  const std::vector<long>& ms);

struct RatioEvaluation {
  long D1 = 5, D2 = 13;
  long m = 0;
  bool degenerate = false;  // Sigma' = Sigma
  // L(m, Sigma x chi1), L(m, Sigma x chi2), L(m, Sigma' x chi1), L(m, Sigma' x chi2)
  std::vector<lf::EvalResult> values;
  double seconds = 0;
};

RatioEvaluation evaluate_ratio(Session& s, long D1, long D2, long m, bool degenerate = false);
// The first report carries the cross-ratio, the second its conjugate; the note records the
// galois check.
std::vector<VerificationReport> judge_ratio(const RatioEvaluation& ev, const Config& cfg);
std::vector<VerificationReport> cmd_verify_ratio(Session& s, long D1, long D2, long m, bool degenerate = false);

VerificationReport cmd_fe_check(Session& s, const std::string& spec_id, int samples);

// "(12);0" style infinity types: kappa list, then w list.
rep::InfinityType parse_infinity_type(const std::string& text);
std::string cmd_critical_set(const std::string& sigma, const std::string& pi);
// Blocks as comma lists of integers, one per block; exponents default to the standard ones.
std::string cmd_kostant(const std::vector<std::string>& blocks);
// Writes the cache file and returns its path.
std::string cmd_gen_coeffs(Session& s, const std::string& spec_id, std::size_t N);

}  // namespace lval::harness
