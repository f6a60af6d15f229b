// Copyright 2026 The dirac1d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dirac1d/errors.hpp"
#include "dirac1d/model.hpp"
#include "dirac1d/oracle.hpp"
#include "dirac1d/quantize.hpp"
#include "dirac1d/specfun.hpp"
#include "output.hpp"

namespace dirac1d::cli {

namespace {

using model::EnergySign;
using model::PotentialParams;
using quantize::SignBranch;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::string format = "csv";
  bool deterministic = false;
  double tol_nu = quantize::kDefaultRootTol;
  double tol_energy = 1e-4;
  std::string out_path;
};

struct ParamOptions {
  std::optional<double> alpha;
  std::optional<double> m;
  std::optional<double> g;

  void attach(CLI::App* sub) {
    sub->add_option("--alpha", alpha, "Dimensionless mass m/sqrt(g)");
    sub->add_option("--m", m, "Mass");
    sub->add_option("--g", g, "Coupling (default 1)");
  }

  PotentialParams resolve() const {
    if (alpha && m) throw UsageError("give either --alpha or --m, not both");
    if (!alpha && !m) throw UsageError("one of --alpha or --m is required");
    const double gv = g.value_or(1.0);
    return alpha ? PotentialParams::from_alpha(*alpha, gv)
                 : PotentialParams::from_mass_coupling(*m, gv);
  }

  void echo(Json& args) const {
    if (alpha) args["alpha"] = *alpha;
    if (m) args["m"] = *m;
    if (g) args["g"] = *g;
  }
};

struct Result {
  OutputRecord record;
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
};

void add_params_metadata(OutputRecord& rec, const PotentialParams& p) {
  rec.metadata.emplace_back("alpha", p.alpha());
  rec.metadata.emplace_back("m", p.m());
  rec.metadata.emplace_back("g", p.g());
}

SignBranch parse_branch(const std::string& s) {
  return s == "plus" ? SignBranch::Plus : SignBranch::Minus;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  ParamOptions params;
  int levels = 4;
  double scan_step = 0.01;
};

Result cmd_spectrum(const SpectrumArgs& a, const GlobalOptions& g) {
  const PotentialParams p = a.params.resolve();
  quantize::SpectrumOptions opt;
  opt.tol = g.tol_nu;
  opt.step = a.scan_step;
  const auto roots = quantize::spectrum(p.alpha(), a.levels, opt);

  Result r;
  OutputRecord& rec = r.record;
  rec.command = "spectrum";
  a.params.echo(rec.args);
  rec.args["levels"] = a.levels;
  rec.args["scan_step"] = a.scan_step;
  add_params_metadata(rec, p);
  rec.columns = {"index", "nu", "branch", "energy_plus", "energy_minus", "residual",
                 "nu_below_zero"};
  long index = 1;
  for (const auto& root : roots) {
    const auto level = model::energy_from_nu(p, root.nu, EnergySign::Positive, root.branch);
    rec.rows.push_back({index++, root.nu, std::string(quantize::to_string(root.branch)),
                        level.energy, -level.energy, root.residual, root.nu < 0.0});
  }
  return r;
}

// -------------------------------------------------------------------- scan

struct ScanArgs {
  ParamOptions params;
  std::string branch = "plus";
  double nu_min = -0.99;
  double nu_max = 5.0;
  double step = 0.01;
};

Result cmd_scan(const ScanArgs& a, const GlobalOptions&) {
  const PotentialParams p = a.params.resolve();
  if (!(a.nu_min > -1.0)) {
    throw DomainError("scan: --nu-min must be greater than -1");
  }
  const SignBranch branch = parse_branch(a.branch);
  const quantize::DerivSign dsign = quantize::dual(branch);

  Result r;
  OutputRecord& rec = r.record;
  rec.command = "scan";
  a.params.echo(rec.args);
  rec.args["branch"] = a.branch;
  rec.args["nu_min"] = a.nu_min;
  rec.args["nu_max"] = a.nu_max;
  rec.args["step"] = a.step;
  add_params_metadata(rec, p);
  rec.metadata.emplace_back("derivative_form_sign", std::string(quantize::to_string(dsign)));
  rec.columns = {"nu", "residual_value_form", "residual_derivative_form", "sign_change"};

  if (!(a.nu_max > a.nu_min)) return r;
  const auto n = static_cast<long>(std::floor((a.nu_max - a.nu_min) / a.step + 1e-9));
  double prev = 0.0;
  for (long i = 0; i <= n; ++i) {
    const double nu = a.nu_min + static_cast<double>(i) * a.step;
    const double f = quantize::condition_residual(nu, p.alpha(), branch);
    const double fd = quantize::condition_residual_deriv_form(nu, p.alpha(), dsign);
    const bool change = i > 0 && (f == 0.0 || (prev != 0.0 && (f < 0.0) != (prev < 0.0)));
    rec.rows.push_back({nu, f, fd, change});
    prev = f;
  }
  return r;
}

// ------------------------------------------------------------ wavefunction

struct WavefunctionArgs {
  ParamOptions params;
  int level = 1;
  double x_min = -5.0;
  double x_max = 5.0;
  double dx = 0.01;
  bool normalize = false;
  std::string energy_sign = "positive";
};

Result cmd_wavefunction(const WavefunctionArgs& a, const GlobalOptions& g) {
  const PotentialParams p = a.params.resolve();
  if (a.level < 1) throw DomainError("wavefunction: unknown level " + std::to_string(a.level));
  if (!(a.x_max >= a.x_min)) throw UsageError("wavefunction: --x-max must be >= --x-min");

  quantize::SpectrumOptions opt;
  opt.tol = g.tol_nu;
  const auto roots = quantize::spectrum(p.alpha(), a.level, opt);
  const auto& root = roots.back();
  const EnergySign sign = a.energy_sign == "negative" ? EnergySign::Negative : EnergySign::Positive;
  const auto level = model::energy_from_nu(p, root.nu, sign, root.branch);

  const double eta_edge =
      std::max(model::coordinates(p, a.x_min).eta, model::coordinates(p, a.x_max).eta);
  if (eta_edge > specfun::kMaxPcfArgument) {
    throw OverflowError("wavefunction: grid reaches eta = " + detail::fmt_real(eta_edge) +
                        ", beyond the supported |eta| <= 40");
  }

  model::WavefunctionCoefficients coeffs = model::assemble_coefficients(p, root, sign);
  double norm_error = 0.0;
  if (a.normalize) {
    const auto n = model::normalize(p, coeffs, root, model::default_halfwidth(p, root.nu));
    coeffs = n.coeffs;
    norm_error = n.norm_error;
  }

  Result r;
  OutputRecord& rec = r.record;
  rec.command = "wavefunction";
  a.params.echo(rec.args);
  rec.args["level"] = a.level;
  rec.args["x_min"] = a.x_min;
  rec.args["x_max"] = a.x_max;
  rec.args["dx"] = a.dx;
  rec.args["normalize"] = a.normalize;
  rec.args["energy_sign"] = a.energy_sign;
  add_params_metadata(rec, p);
  rec.metadata.emplace_back("nu", root.nu);
  rec.metadata.emplace_back("branch", std::string(quantize::to_string(root.branch)));
  rec.metadata.emplace_back("energy", level.energy);
  rec.metadata.emplace_back("c_plus", coeffs.c_plus);
  rec.metadata.emplace_back("d_plus", coeffs.d_plus);
  rec.metadata.emplace_back("c_minus", coeffs.c_minus);
  rec.metadata.emplace_back("d_minus", coeffs.d_minus);
  if (a.normalize) rec.metadata.emplace_back("norm_error", norm_error);
  rec.metadata.emplace_back("continuity_jump", model::continuity_jump(p, coeffs, root.nu));
  rec.columns = {"x", "psi1", "psi2"};

  const auto n = static_cast<long>(std::floor((a.x_max - a.x_min) / a.dx + 1e-9));
  for (long i = 0; i <= n; ++i) {
    const double x = a.x_min + static_cast<double>(i) * a.dx;
    const auto s = model::evaluate_bispinor(p, coeffs, root.nu, x);
    rec.rows.push_back({s.x, s.psi1, s.psi2});
  }
  return r;
}

// ----------------------------------------------------------- hermite-check

struct HermiteArgs {
  ParamOptions params;
  int n_max = 250;
};

Result cmd_hermite_check(const HermiteArgs& a, const GlobalOptions&) {
  const PotentialParams p = a.params.resolve();
  const auto rows = quantize::hermite_check(p.alpha(), a.n_max);

  Result r;
  OutputRecord& rec = r.record;
  rec.command = "hermite-check";
  a.params.echo(rec.args);
  rec.args["n_max"] = a.n_max;
  add_params_metadata(rec, p);
  rec.columns = {"n", "residual_plus", "residual_minus", "is_root", "overflow"};
  long roots = 0;
  long overflow = 0;
  Json root_list = Json::array();
  for (const auto& row : rows) {
    std::string is_root = "none";
    if (row.root_plus && row.root_minus) {
      is_root = "both";
    } else if (row.root_plus) {
      is_root = "plus";
    } else if (row.root_minus) {
      is_root = "minus";
    }
    if (row.root_plus || row.root_minus) {
      ++roots;
      root_list.push_back(row.n);
    }
    if (row.overflow) ++overflow;
    rec.rows.push_back({static_cast<long>(row.n), row.residual_plus, row.residual_minus, is_root,
                        row.overflow});
  }
  rec.metadata.emplace_back("root_count", roots);
  rec.metadata.emplace_back("roots", root_list);
  rec.metadata.emplace_back("overflow_rows", overflow);
  if (overflow > 0) {
    r.warnings.push_back(std::to_string(overflow) + " rows overflowed double range");
  }
  return r;
}

// ---------------------------------------------------------- oracle-compare

struct OracleArgs {
  ParamOptions params;
  int levels = 4;
  std::optional<double> x_max;
  std::optional<double> h;
  std::optional<double> e_step;
};

Result cmd_oracle_compare(const OracleArgs& a, const GlobalOptions& g) {
  const PotentialParams p = a.params.resolve();
  oracle::ShootingConfig cfg = oracle::ShootingConfig::defaults(p);
  if (a.x_max) cfg.x_max = *a.x_max;
  if (a.h) cfg.h = *a.h;
  if (a.e_step) cfg.e_step = *a.e_step;
  oracle::validate(p, cfg);

  quantize::SpectrumOptions opt;
  opt.tol = g.tol_nu;
  const auto roots = quantize::spectrum(p.alpha(), a.levels, opt);
  const auto found = oracle::first_levels(p, a.levels, cfg);

  Result r;
  OutputRecord& rec = r.record;
  rec.command = "oracle-compare";
  a.params.echo(rec.args);
  rec.args["levels"] = a.levels;
  if (a.x_max) rec.args["x_max"] = *a.x_max;
  if (a.h) rec.args["h"] = *a.h;
  if (a.e_step) rec.args["e_step"] = *a.e_step;
  add_params_metadata(rec, p);
  rec.metadata.emplace_back("x_max", cfg.x_max);
  rec.metadata.emplace_back("h", cfg.h);
  rec.metadata.emplace_back("e_step", cfg.e_step);
  rec.columns = {"index",    "nu",       "branch",   "energy_analytic",
                 "energy_oracle", "abs_diff", "rel_diff", "pass"};
  long failures = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double ea = model::energy_from_nu(p, roots[i].nu, EnergySign::Positive).energy;
    const double eo = found[i].energy;
    const double diff = std::fabs(eo - ea);
    const double rel = diff / std::fabs(ea);
    const bool pass = rel <= g.tol_energy && found[i].converged;
    if (!pass) ++failures;
    rec.rows.push_back({static_cast<long>(i + 1), roots[i].nu,
                        std::string(quantize::to_string(roots[i].branch)), ea, eo, diff, rel,
                        pass});
  }
  rec.metadata.emplace_back("failures", failures);
  if (failures > 0) {
    r.exit_code = kExitOracleMismatch;
    r.warnings.push_back(std::to_string(failures) + " of " + std::to_string(roots.size()) +
                         " levels disagree beyond tol_energy");
  }
  return r;
}

// ------------------------------------------------------------------ driver

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const WindowExhausted*>(&e) ||
      dynamic_cast<const TailError*>(&e)) {
    return kExitDomain;
  }
  return kExitNumeric;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound states of the 1+1 Dirac equation with scalar potential g|x|", "dirac1d"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--deterministic", global.deterministic, "Omit the timestamp");
  app.add_option("--tol-nu", global.tol_nu, "Root refinement tolerance in nu")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-energy", global.tol_energy, "Relative energy tolerance for oracle-compare")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", global.out_path, "Write output to this file instead of stdout");

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Lowest levels of both branches");
  spectrum_args.params.attach(spectrum);
  spectrum->add_option("--levels", spectrum_args.levels, "Number of levels")
      ->check(CLI::PositiveNumber);
  spectrum->add_option("--scan-step", spectrum_args.scan_step, "Bracketing grid step in nu")
      ->check(CLI::PositiveNumber);

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Quantization residuals on a nu grid");
  scan_args.params.attach(scan);
  scan->add_option("--branch", scan_args.branch, "plus or minus")
      ->check(CLI::IsMember({"plus", "minus"}));
  scan->add_option("--nu-min", scan_args.nu_min, "First nu");
  scan->add_option("--nu-max", scan_args.nu_max, "Last nu");
  scan->add_option("--step", scan_args.step, "Grid step")->check(CLI::PositiveNumber);

  WavefunctionArgs wf_args;
  auto* wf = app.add_subcommand("wavefunction", "Sample the bispinor of one level");
  wf_args.params.attach(wf);
  wf->add_option("--level", wf_args.level, "Level index, 1 = lowest");
  wf->add_option("--x-min", wf_args.x_min, "Grid start");
  wf->add_option("--x-max", wf_args.x_max, "Grid end");
  wf->add_option("--dx", wf_args.dx, "Grid step")->check(CLI::PositiveNumber);
  wf->add_flag("--normalize", wf_args.normalize, "Normalize to unit probability");
  wf->add_option("--energy-sign", wf_args.energy_sign, "positive or negative")
      ->check(CLI::IsMember({"positive", "negative"}));

  HermiteArgs hermite_args;
  auto* hermite = app.add_subcommand("hermite-check", "Quantization condition at integer order");
  hermite_args.params.attach(hermite);
  hermite->add_option("--n-max", hermite_args.n_max, "Largest n")->check(CLI::Range(0, 250));

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle-compare", "Compare against the shooting solver");
  oracle_args.params.attach(oracle_cmd);
  oracle_cmd->add_option("--levels", oracle_args.levels, "Number of levels")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--x-max", oracle_args.x_max, "Shooting domain halfwidth");
  oracle_cmd->add_option("--rk-step", oracle_args.h, "RK4 step h");
  oracle_cmd->add_option("--e-step", oracle_args.e_step, "Energy scan step");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    const int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  Result result;
  try {
    if (*spectrum) {
      result = cmd_spectrum(spectrum_args, global);
    } else if (*scan) {
      result = cmd_scan(scan_args, global);
    } else if (*wf) {
      result = cmd_wavefunction(wf_args, global);
    } else if (*hermite) {
      result = cmd_hermite_check(hermite_args, global);
    } else {
      result = cmd_oracle_compare(oracle_args, global);
    }
  } catch (const UsageError& e) {
    err << "dirac1d: usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "dirac1d: error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  OutputRecord& rec = result.record;
  rec.args["format"] = global.format;
  rec.args["deterministic"] = global.deterministic;
  rec.metadata.emplace_back("tol_nu", global.tol_nu);
  rec.metadata.emplace_back("tol_energy", global.tol_energy);
  if (!global.deterministic) rec.metadata.emplace_back("generated_at", utc_timestamp());

  for (const auto& w : result.warnings) err << "dirac1d: warning: " << w << '\n';

  std::ofstream file;
  std::ostream* sink = &out;
  if (!global.out_path.empty()) {
    file.open(global.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "dirac1d: usage error: cannot open " << global.out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }
  if (global.format == "json") {
    write_json(*sink, rec);
  } else {
    write_csv(*sink, rec);
  }
  return result.exit_code;
}

}  // namespace dirac1d::cli
