#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rfiqkd/errors.hpp"
#include "rfiqkd/scan.hpp"

namespace {

using namespace rfiqkd;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::string mode_text;
  std::string security_text;
  double beta = 0.0;
  double n_total = 0.0;
  double gamma = 0.0;
  std::uint64_t seed = 0;

  CLI::Option* config = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* mode = nullptr;
  CLI::Option* security = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* n_total_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  o.config =
      cmd->add_option("--config", o.config_path, "key = value configuration file");
  o.out = cmd->add_option("--out", o.out_path, "output CSV path");
  o.seed_opt = cmd->add_option("--seed", o.seed, "optimizer RNG seed");
  o.beta_opt = cmd->add_option(
      "--beta", o.beta, "reference-frame drift angle in degrees (replaces beta_list)");
  o.n_total_opt =
      cmd->add_option("--n-total", o.n_total, "total transmitted pulse count");
  o.gamma_opt = cmd->add_option(
      "--gamma", o.gamma, "statistical confidence multiplier (0 = asymptotic)");
  o.mode = cmd->add_option("--mode", o.mode_text,
                           "rfi-biased | rfi-unbiased | bb84-biased");
  o.security = cmd->add_option("--security-mode", o.security_text,
                               "eve-info | literal | bb84");
}

ScanSpec build_spec(const CommonOpts& o) {
  ScanSpec spec = o.config->count() ? parse_config(o.config_path) : ScanSpec{};
  if (o.mode->count()) spec.mode = parse_scan_mode(o.mode_text);
  if (o.security->count()) spec.security_mode = parse_security_mode(o.security_text);
  if (o.beta_opt->count()) spec.beta_list = {o.beta};
  if (o.n_total_opt->count()) spec.n_total = o.n_total;
  if (o.gamma_opt->count()) spec.gamma = o.gamma;
  if (o.seed_opt->count()) spec.seed = o.seed;
  if (o.out->count()) spec.out = o.out_path;
  spec.validate();
  return spec;
}

void write_rows(const std::vector<ScanRow>& rows, const std::string& path) {
  emit_csv(rows, path);
  std::printf("wrote %zu rows to %s\n", rows.size(), path.c_str());
}

void print_report(const ScanSpec& spec, double beta, double distance,
                  double n_pulses, const OptimizationResult& res) {
  const SecurityMode effective = spec.mode == ScanMode::Bb84Biased
                                     ? SecurityMode::Bb84
                                     : spec.security_mode;
  const ProtocolParams& p = res.params;
  const KeyRateReport& r = res.report;
  std::printf("mode: %s\n", to_string(spec.mode).c_str());
  std::printf("security_mode: %s\n", to_string(effective).c_str());
  std::printf("beta_deg: %.17g\n", beta);
  std::printf("distance_km: %.17g\n", distance);
  std::printf("n_pulses: %.17g\n", n_pulses);
  std::printf("rate: %.17g\n", r.rate);
  std::printf("no_key: %d\n", r.no_key ? 1 : 0);
  std::printf("mu: %.17g\nnu: %.17g\n", p.mu, p.nu);
  std::printf("p_mu: %.17g\np_nu: %.17g\n", p.p_mu, p.p_nu);
  std::printf("p_za_mu: %.17g\np_xa_mu: %.17g\n", p.p_za_mu, p.p_xa_mu);
  std::printf("p_za_nu: %.17g\np_xa_nu: %.17g\n", p.p_za_nu, p.p_xa_nu);
  std::printf("p_zb: %.17g\np_xb: %.17g\n", p.p_zb, p.p_xb);
  std::printf("c_value: %.17g\n", r.c_value);
  std::printf("phi: %.17g\nvarphi: %.17g\n", r.phi, r.varphi);
  std::printf("i_e: %.17g\n", r.i_e);
  std::printf("y1_zz_lower: %.17g\n", r.y1_zz_lower);
  std::printf("e1_privacy_upper: %.17g\n", r.e1_privacy_upper);
  std::printf("q_mu_zz: %.17g\ne_mu_zz: %.17g\n", r.q_mu_zz, r.e_mu_zz);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoy-state QKD key-rate scans and full-parameter optimization"};
  app.require_subcommand(1);

  CommonOpts dist_opts;
  CLI::App* scan_distance = app.add_subcommand(
      "scan-distance", "Optimize the key rate over a distance grid");
  add_common(scan_distance, dist_opts);
  scan_distance->callback([&] {
    const ScanSpec spec = build_spec(dist_opts);
    write_rows(run_distance_scan(spec), spec.out);
  });

  CommonOpts pulse_opts;
  double pulse_distance = 0.0;
  CLI::App* scan_pulses = app.add_subcommand(
      "scan-pulses", "Optimize the key rate over a pulse-count grid at a fixed distance");
  add_common(scan_pulses, pulse_opts);
  CLI::Option* pulse_distance_opt = scan_pulses->add_option(
      "--distance", pulse_distance, "fixed distance in km (overrides distance_start)");
  scan_pulses->callback([&] {
    ScanSpec spec = build_spec(pulse_opts);
    if (pulse_distance_opt->count()) {
      spec.distance_start = pulse_distance;
      spec.distance_stop = pulse_distance;
      spec.validate();
    }
    write_rows(run_pulse_scan(spec), spec.out);
  });

  CommonOpts cmp_opts;
  CLI::App* compare = app.add_subcommand(
      "compare", "Interleave rfi-biased and bb84-biased distance curves");
  add_common(compare, cmp_opts);
  compare->callback([&] {
    const ScanSpec spec = build_spec(cmp_opts);
    write_rows(run_comparison(spec), spec.out);
  });

  CommonOpts point_opts;
  double point_distance = 50.0;
  CLI::App* optimize_cmd = app.add_subcommand(
      "optimize", "Optimize a single point and print the full report");
  add_common(optimize_cmd, point_opts);
  optimize_cmd->add_option("--distance", point_distance, "distance in km");
  optimize_cmd->callback([&] {
    const ScanSpec spec = build_spec(point_opts);
    const double beta = spec.beta_list.front();
    const OptimizationResult res =
        optimize_point(spec, beta, point_distance, spec.n_total);
    print_report(spec, beta, point_distance, spec.n_total, res);
    if (point_opts.out->count()) {
      emit_csv({to_scan_row(spec.mode, beta, point_distance, spec.n_total, res)},
               spec.out);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const rfiqkd::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const rfiqkd::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  }
  return 0;
}
