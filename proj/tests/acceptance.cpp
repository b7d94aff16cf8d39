// One PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "kostant_oracle.hpp"
#include "lval/harness.hpp"

using namespace lval;
using namespace lval::harness;
namespace bmp = boost::multiprecision;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << s << " s";
  return os.str();
}

// Digits for the verification drivers: recognizes heights up to 10^46 after rescaling.
constexpr int kVerifyDigits = 100;

struct SymCase {
  int weight, n;
  SymEvaluation ev;
  std::vector<VerificationReport> reports;
};

void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  long checked = 0;
  PrecisionScope ps(55);
  for (int k : {12, 16}) {
    auto f = modforms::level_one_eigenform(k, 120);
    for (long p : modforms::primes_up_to(100))
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
          try {
            lf::clebsch_gordan_identity(a, b, lf::exact_satake(f, p));
            ++checked;
          } catch (const std::logic_error&) {
            ok = false;
          }
        }
  }
  double t = since(t0);
  report(1, ok && t < 10, std::to_string(checked) + " exact identities, " + secs(t));
}

void criterion2() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(20240601);
  bool ok = true;
  int exhaustive = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto in = oracle::random_admissible(n, rng);
    auto r = rep::kostant_representative(in.blocks, in.comp, in.a);
    long half = 0;
    for (std::size_t i = 0; i < in.comp.size(); ++i)
      for (std::size_t j = i + 1; j < in.comp.size(); ++j) half += in.comp[i] * in.comp[j];
    long bsum = 0;
    for (int c : in.comp) bsum += rep::bottom_degree(c);
    ok = ok && r.length == rep::bottom_degree(n) - bsum && 2 * r.length == half && r.length_identity &&
         r.half_sum_identity && r.mu_dominant_integral;
    if (n <= 6) {
      auto o = oracle::exhaustive(r.lambda, in.comp);
      ok = ok && o.dominant_count == 1 && o.perm == r.perm && o.unique_min_in_coset;
      ++exhaustive;
    }
  }
  double t = since(t0);
  report(2, ok && t < 30,
         "1000 instances, n <= 8, " + std::to_string(exhaustive) + " against the exhaustive oracle, " + secs(t));
}

void criterion3() {
  auto t0 = Clock::now();
  Config cfg;
  Session s(cfg);
  PrecisionScope ps(55);
  Real worst = 0;
  std::string worst_id;
  bool ok = true;
  for (std::string id : {"zeta", "hecke@12", "hecke@16", "hecke@18", "hecke@20", "hecke@22", "hecke@26", "sym2@12",
                         "sym3@12", "rs@12,16"}) {
    auto r = cmd_fe_check(s, id, 5);
    if (r.ratio.re > worst) {
      worst = r.ratio.re;
      worst_id = id;
    }
    ok = ok && r.ratio.re < Real("1e-35");
  }
  auto z = s.lfunction(spec_builder(s, "zeta"), {Complex(Real(2))});
  Real zerr = abs(z.evaluate(Complex(Real(2))).value - Complex(pi() * pi() / 6));
  ok = ok && zerr < Real("1e-38");
  double t = since(t0);
  report(3, ok && t < 300,
         "max FE residual " + decimal(worst, 2) + " (" + worst_id + "), |zeta(2) - pi^2/6| = " + decimal(zerr, 2) +
             ", " + secs(t));
}

std::vector<SymCase> criterion4(Session& s) {
  auto t0 = Clock::now();
  std::vector<SymCase> cases;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{12, 1}, {12, 2}, {12, 3}, {16, 2}}) {
    SymCase c{k, n, evaluate_sym(s, k, n, {}), {}};
    c.reports = judge_sym(c.ev, s.periods(k), s.config());
    cases.push_back(std::move(c));
  }
  double t = since(t0);
  int total = 0, verified = 0, strict = 0;
  std::string tall;
  for (const auto& c : cases)
    for (const auto& r : c.reports) {
      if (r.note == "central point skipped") continue;
      ++total;
      if (r.verdict != Verdict::verified) continue;
      ++verified;
      if (r.recognition.residual < Real("1e-25") && r.recognition.height < mpz_class("10000000000"))
        ++strict;
      else
        tall += " (" + std::to_string(c.weight) + ",Sym" + std::to_string(c.n) + ",m=" + std::to_string(r.m) + ")";
    }
  std::string detail = std::to_string(verified) + "/" + std::to_string(total) + " non-central ratios rational, " +
                       std::to_string(strict) + " with height < 1e10, " + secs(t);
  if (!tall.empty()) detail += "; height >= 1e10 at" + tall;
  if (verified != total) detail += "; not all non-central ratios rational";
  if (t >= 900) detail += "; over budget";
  report(4, strict == total && t < 900, detail);

  // Sym^4 at weight 12: budgeted, not gating
  try {
    auto t1 = Clock::now();
    auto rs = cmd_verify_sym(s, 12, 4, {});
    int v = 0, nc = 0;
    for (const auto& r : rs) {
      if (r.note == "central point skipped") continue;
      ++nc;
      v += r.verdict == Verdict::verified;
    }
    std::cout << "INFO Sym4 at weight 12: " << v << "/" << nc << " non-central ratios rational, " << secs(since(t1))
              << std::endl;
  } catch (const std::exception& e) {
    std::cout << "INFO Sym4 at weight 12: " << e.what() << std::endl;
  }
  return cases;
}

std::pair<TensorEvaluation, std::vector<VerificationReport>> criterion5(Session& s) {
  auto t0 = Clock::now();
  auto ev = evaluate_tensor(s, {12, 16}, {});
  auto reports = judge_tensor(ev, {s.periods(12), s.periods(16)}, s.config());
  double t = since(t0);
  bool ok = !reports.empty();
  std::string vals;
  for (const auto& r : reports) {
    ok = ok && r.verdict == Verdict::verified;
    vals += " " + r.recognition.str();
  }
  report(5, ok && t < 600, std::to_string(reports.size()) + " critical points:" + vals + ", " + secs(t));
  return {ev, reports};
}

std::pair<RatioEvaluation, std::vector<VerificationReport>> criterion6(Session& s) {
  auto t0 = Clock::now();
  auto ev = evaluate_ratio(s, 5, 13, 13);
  auto reports = judge_ratio(ev, s.config());
  double t = since(t0);
  bool ok = reports.size() == 2 && reports[0].verdict == Verdict::verified &&
            reports[0].recognition.kind == recognize::Kind::quadratic && reports[0].recognition.y != 0 &&
            reports[0].note == "galois check passed";
  report(6, ok && t < 1200, "m = 13, cross-ratio " + reports[0].recognition.str() + ", " + reports[0].note + ", " + secs(t));
  return {ev, reports};
}

void criterion7(Session& s, const std::vector<SymCase>& sym, const TensorEvaluation& tev,
                const std::vector<VerificationReport>& trep, const RatioEvaluation& rev,
                const std::vector<VerificationReport>& rrep) {
  auto t0 = Clock::now();
  PrecisionScope ps(kVerifyDigits + 15);
  periods::PeriodTable base;
  base.forms["12"] = s.periods(12);
  base.forms["16"] = s.periods(16);
  std::mt19937_64 rng(77);
  int changed = 0, compared = 0;
  for (int i = 0; i < 20; ++i) {
    auto t = base.rescaled(rng, 100);
    for (const auto& c : sym) {
      auto r = judge_sym(c.ev, t.at(std::to_string(c.weight)), s.config());
      for (std::size_t j = 0; j < r.size(); ++j, ++compared) changed += r[j].verdict != c.reports[j].verdict;
    }
    auto r = judge_tensor(tev, {t.at("12"), t.at("16")}, s.config());
    for (std::size_t j = 0; j < r.size(); ++j, ++compared) changed += r[j].verdict != trep[j].verdict;
    // the cross-ratio carries no periods; re-judged for completeness
    auto q = judge_ratio(rev, s.config());
    for (std::size_t j = 0; j < q.size(); ++j, ++compared) changed += q[j].verdict != rrep[j].verdict;
  }
  report(7, changed == 0,
         std::to_string(compared) + " verdicts over 20 resamplings, " + std::to_string(changed) + " changed, " +
             secs(since(t0)));
}

void criterion8() {
  auto t0 = Clock::now();
  Config cfg;
  Session s(cfg);
  PrecisionScope ps(55);
  const auto& p12 = s.periods(12);
  const auto& p16 = s.periods(16);
  auto f12 = modforms::level_one_eigenform(12, 1200);
  auto f16 = modforms::level_one_eigenform(16, 1200);
  Real fit = p12.petersson / (periods::sym2_petersson_kernel(f12, cfg.digits) * 3 / pi());
  auto c = recognize::recognize_rational(Complex(fit), mpz_class(1000), Real("1e-25"));
  bool ok = c.accepted();
  Real worst = 0;
  if (ok)
    for (auto [f, p] : std::vector<std::pair<const modforms::Newform*, const FormPeriods*>>{{&f12, &p12}, {&f16, &p16}}) {
      Real v = periods::petersson_via_sym2(*f, cfg.digits, c.x);
      Real g = bmp::abs(v - p->petersson) / p->petersson;
      if (g > worst) worst = g;
    }
  ok = ok && worst < Real("1e-10");
  report(8, ok, "fitted constant " + c.str() + " at weight 12, max relative gap " + decimal(worst, 2) + ", " +
                    secs(since(t0)));
}

void criterion9() {
  auto t0 = Clock::now();
  Config hi;
  hi.digits = 50;
  Session s(hi);
  PrecisionScope ps(70);
  std::mt19937_64 rng(99);
  int moved = 0, total = 0;
  Real worst = 0;
  for (std::string id : {"zeta", "hecke@12", "hecke@16", "sym2@12", "twist@12:5"}) {
    auto make = spec_builder(s, id);
    double k = static_cast<double>(make(64).k());
    std::uniform_real_distribution<double> ux(-1.5, 1.5), uy(-3.0, 3.0);
    std::vector<Complex> pts;
    for (int j = 0; j < 20; ++j) pts.emplace_back(Real(k / 2 + ux(rng)), Real(uy(rng)));
    auto L50 = s.lfunction(make, pts);
    lf::LFunction L40(L50.spec(), L50.coefficients(), 40);
    for (const auto& p : pts) {
      auto a = L40.evaluate(p);
      auto b = L50.evaluate(p);
      Real d = abs(a.value - b.value);
      ++total;
      if (!(d < a.error_bound)) ++moved;
      if (a.error_bound > 0 && d / a.error_bound > worst) worst = d / a.error_bound;
    }
  }
  report(9, moved == 0 && total == 100,
         std::to_string(total) + " points, " + std::to_string(moved) + " moved beyond the 40-digit bound, worst " +
             "move/bound " + decimal(worst, 2) + ", " + secs(since(t0)));
}

}  // namespace

int main() {
  auto run = [](const char* name, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": exception " << e.what() << std::endl;
    }
  };
  run("criterion 1", criterion1);
  run("criterion 2", criterion2);
  run("criterion 3", criterion3);
  run("criteria 4-7", [] {
    Config cfg;
    cfg.digits = kVerifyDigits;
    Session s(cfg);
    PrecisionScope ps(kVerifyDigits + 15);
    auto sym = criterion4(s);
    auto [tev, trep] = criterion5(s);
    auto [rev, rrep] = criterion6(s);
    criterion7(s, sym, tev, trep, rev, rrep);
  });
  run("criterion 8", criterion8);
  run("criterion 9", criterion9);
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << failures << " failing" << std::endl;
  return failures ? 1 : 0;
}
