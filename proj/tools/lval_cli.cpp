#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "lval/harness.hpp"

using namespace lval;
using namespace lval::harness;

namespace {

std::vector<long> parse_points(const std::string& s) {
  std::vector<long> out;
  if (s == "all") return out;
  std::stringstream is(s);
  std::string t;
  while (std::getline(is, t, ','))
    if (!t.empty()) out.push_back(std::stol(t));
  return out;
}

void print(const std::vector<VerificationReport>& runs) {
  for (const auto& r : runs) {
    std::cout << r.target << " ";
    for (const auto& f : r.forms) std::cout << f << " ";
    std::cout << "m=" << r.m << " ratio=" << decimal(r.ratio.re, 20);
    if (r.ratio.im != 0) std::cout << (r.ratio.im < 0 ? "-" : "+") << decimal(abs(r.ratio.im), 5) << "i";
    std::cout << " -> " << r.recognition.str() << " [" << verdict_str(r.verdict) << "]";
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical L-values of level-one forms against period conjectures"};
  app.require_subcommand(1);
  std::optional<int> digits;
  std::optional<std::string> cache_dir, tol, max_height;
  std::optional<std::size_t> coeff_cap;
  std::string json_path, config_path;
  bool try_central = false;
  app.add_option("--digits", digits, "working precision in decimal digits (default 40)");
  app.add_option("--cache-dir", cache_dir, "coefficient cache directory");
  app.add_option("--coeff-cap", coeff_cap, "largest coefficient table allowed");
  app.add_option("--json", json_path, "write the report document here");
  app.add_option("--config", config_path, "JSON config file; flags win");
  app.add_option("--tol", tol, "recognition tolerance (default 1e-25)");
  app.add_option("--max-height", max_height, "recognition height bound");
  app.add_flag("--try-central", try_central, "attempt central critical points");

  int weight = 12, power = 1, samples = 5;
  std::string points = "all", weights = "12,16", spec_id = "sym2@12", sigma, pi_type;
  long chi1 = 5, chi2 = 13, m = 13;
  bool degenerate = false;
  std::size_t terms = 1000;
  std::vector<std::string> blocks;

  auto* sym = app.add_subcommand("verify-sym", "symmetric power ratios");
  sym->add_option("--weight", weight)->required();
  sym->add_option("--power", power)->required();
  sym->add_option("--m", points, "comma list or all");
  auto* ten = app.add_subcommand("verify-tensor", "Rankin-Selberg ratios");
  ten->add_option("--weights", weights, "comma list of two weights");
  ten->add_option("--m", points, "comma list or all");
  auto* rat = app.add_subcommand("verify-ratio", "weight-24 cross-ratio");
  rat->add_option("--chi1", chi1, "fundamental discriminant");
  rat->add_option("--chi2", chi2, "fundamental discriminant");
  rat->add_option("--m", m);
  rat->add_flag("--degenerate", degenerate, "use the same form twice");
  auto* fe = app.add_subcommand("fe-check", "functional equation residuals");
  fe->add_option("--spec", spec_id, "zeta, hecke@k, sym<n>@k, rs@a,b, twist@k:D");
  fe->add_option("--samples", samples);
  auto* kos = app.add_subcommand("kostant", "Kostant representative");
  kos->add_option("--block", blocks, "comma list per block")->required();
  auto* crit = app.add_subcommand("critical-set", "unitary critical set of GL_n x GL_n'");
  crit->add_option("--sigma", sigma, "e.g. (12);0")->required();
  crit->add_option("--pi", pi_type, "e.g. (4);0")->required();
  auto* gen = app.add_subcommand("gen-coeffs", "write a coefficient cache file");
  gen->add_option("--spec", spec_id)->required();
  gen->add_option("--terms", terms);

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    apply_environment(cfg);
    if (digits) cfg.digits = *digits;
    if (cache_dir) cfg.cache_dir = *cache_dir;
    if (coeff_cap) cfg.coeff_cap = *coeff_cap;
    if (tol) cfg.tol = *tol;
    if (max_height) cfg.max_height = *max_height;
    if (try_central) cfg.try_central = true;
    cfg.json_path = json_path;

    if (kos->parsed()) {
      std::cout << cmd_kostant(blocks) << "\n";
      return 0;
    }
    if (crit->parsed()) {
      std::cout << cmd_critical_set(sigma, pi_type) << "\n";
      return 0;
    }
    Session s(cfg);
    PrecisionScope ps(static_cast<unsigned>(cfg.digits + lf::LFunction::kGuardDigits));
    if (gen->parsed()) {
      std::cout << cmd_gen_coeffs(s, spec_id, terms) << "\n";
      return 0;
    }
    std::vector<VerificationReport> runs;
    if (sym->parsed()) runs = cmd_verify_sym(s, weight, power, parse_points(points));
    if (ten->parsed()) {
      std::vector<int> ws;
      for (long w : parse_points(weights)) ws.push_back(static_cast<int>(w));
      runs = cmd_verify_tensor(s, ws, parse_points(points));
    }
    if (rat->parsed()) runs = cmd_verify_ratio(s, chi1, chi2, m, degenerate);
    if (fe->parsed()) runs = {cmd_fe_check(s, spec_id, samples)};
    print(runs);
    if (!cfg.json_path.empty()) {
      std::ofstream out(cfg.json_path);
      out << run_document(runs, cfg).dump(2) << "\n";
    }
    bool ok = true;
    for (const auto& r : runs) ok = ok && (r.verdict == Verdict::verified || r.verdict == Verdict::inconclusive_zero);
    return ok ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
