#pragma once

#include <string>
#include <vector>

#include "rfiqkd/optimizer.hpp"
#include "rfiqkd/protocol.hpp"
#include "rfiqkd/security.hpp"

namespace rfiqkd {

/// Which protocol family a scan optimizes at each grid point.
///  - RfiBiased:   full ten-parameter optimization of the drift-tolerant
///                 protocol.
///  - RfiUnbiased: baseline with uniform basis/intensity weights; only the
///                 signal intensity is tuned per point.
///  - Bb84Biased:  two-basis protocol, seven free parameters, both bases
///                 exposed to the frame drift.
enum class ScanMode { RfiBiased, RfiUnbiased, Bb84Biased };

ScanMode parse_scan_mode(const std::string& text);
SecurityMode parse_security_mode(const std::string& text);
std::string to_string(ScanMode mode);
std::string to_string(SecurityMode mode);

/// Batch description: which curves to trace and under what statistics.
/// Physical channel constants are fixed at the reference values; only the
/// drift angle, the grids, and the statistical model vary.
struct ScanSpec {
  ScanMode mode = ScanMode::RfiBiased;
  std::vector<double> beta_list = {0.0};       // degrees
  double distance_start = 0.0;                 // km
  double distance_stop = 200.0;                // km
  double distance_step = 5.0;                  // km
  std::vector<double> n_pulses_list = {1e9, 1e10, 1e11, 1e12, 1e13};
  double gamma = defaults::kGamma;
  double n_total = defaults::kPulseCount;      // pulses for distance scans
  SecurityMode security_mode = SecurityMode::RfiEveInfo;
  int n_starts = 16;
  std::uint64_t seed = 1;
  std::string out = "scan.csv";

  /// Expanded distance grid (inclusive of the endpoint up to rounding).
  std::vector<double> distance_grid() const;

  /// Throws ValidationError on empty grids, negative distances, N < 1, or a
  /// security mode inconsistent with the scan mode.
  void validate() const;
};

/// One optimized grid point, flattened for CSV output.
struct ScanRow {
  std::string mode;
  double beta_deg = 0.0;
  double distance_km = 0.0;
  double n_pulses = 0.0;
  double rate = 0.0;
  ProtocolParams params;
  double c_value = 0.0;
  double y1_zz_lower = 0.0;
  double e1_zz_upper = 0.0;
  double i_e = 0.0;
  bool no_key = false;
};

/// Rate-versus-distance curves, one optimization per (beta, distance).
/// Each curve stops early after three consecutive zero-rate points (the
/// zero-rate rows are kept and flagged). Later points reuse the previous
/// point's optimum as an extra start.
std::vector<ScanRow> run_distance_scan(const ScanSpec& spec);

/// Rate versus total pulse count at a fixed distance (the start of the
/// distance grid), one optimization per (beta, n_pulses).
std::vector<ScanRow> run_pulse_scan(const ScanSpec& spec);

/// Interleaved drift-tolerant vs two-basis curves over the same beta and
/// distance grids; spec.mode is ignored. Per-curve early termination as in
/// run_distance_scan.
std::vector<ScanRow> run_comparison(const ScanSpec& spec);

/// Optimize one (beta, distance, n_pulses) point under spec's mode and
/// statistics.
OptimizationResult optimize_point(const ScanSpec& spec, double beta,
                                  double distance_km, double n_pulses);

/// Flatten an optimization result into a CSV row.
ScanRow to_scan_row(ScanMode mode, double beta, double distance_km,
                    double n_pulses, const OptimizationResult& result);

/// Reads a line-oriented `key = value` file. Recognized keys: mode,
/// beta_list, distance_start, distance_stop, distance_step, n_pulses_list,
/// gamma, n_total, security_mode, n_starts, seed, out. Lists are
/// comma-separated. Blank lines and lines starting with '#' are skipped.
/// Unknown keys, malformed lines, and out-of-range values throw
/// ValidationError with the path and line number; missing keys keep the
/// ScanSpec defaults.
ScanSpec parse_config(const std::string& path);

/// Writes header plus one line per row, 17-significant-digit numbers,
/// column order:
/// mode,beta_deg,distance_km,n_pulses,rate,mu,nu,p_mu,p_nu,p_za_mu,p_xa_mu,
/// p_za_nu,p_xa_nu,p_zb,p_xb,c_value,y1_zz_lower,e1_zz_upper,i_e,no_key_flag
/// Throws ValidationError with the path on I/O failure.
void emit_csv(const std::vector<ScanRow>& rows, const std::string& path);

/// The CSV header line (without trailing newline); exposed for tests.
std::string csv_header();

}  // namespace rfiqkd
