#include "rfiqkd/scan.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "rfiqkd/channel.hpp"
#include "rfiqkd/errors.hpp"
#include "rfiqkd/fluctuation.hpp"

namespace rfiqkd {

ScanMode parse_scan_mode(const std::string& text) {
  if (text == "rfi-biased") return ScanMode::RfiBiased;
  if (text == "rfi-unbiased") return ScanMode::RfiUnbiased;
  if (text == "bb84-biased") return ScanMode::Bb84Biased;
  throw ValidationError(
      "mode must be one of rfi-biased, rfi-unbiased, bb84-biased (got '" +
      text + "')");
}

SecurityMode parse_security_mode(const std::string& text) {
  if (text == "eve-info") return SecurityMode::RfiEveInfo;
  if (text == "literal") return SecurityMode::RfiLiteral;
  if (text == "bb84") return SecurityMode::Bb84;
  throw ValidationError(
      "security_mode must be one of eve-info, literal, bb84 (got '" + text +
      "')");
}

std::string to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::RfiBiased: return "rfi-biased";
    case ScanMode::RfiUnbiased: return "rfi-unbiased";
    default: return "bb84-biased";
  }
}

std::string to_string(SecurityMode mode) {
  switch (mode) {
    case SecurityMode::RfiEveInfo: return "eve-info";
    case SecurityMode::RfiLiteral: return "literal";
    default: return "bb84";
  }
}

std::vector<double> ScanSpec::distance_grid() const {
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double d = distance_start + i * distance_step;
    if (d > distance_stop + 1e-9) break;
    grid.push_back(d);
  }
  return grid;
}

void ScanSpec::validate() const {
  if (beta_list.empty()) throw ValidationError("beta_list must be nonempty");
  for (double b : beta_list) {
    if (!std::isfinite(b)) throw ValidationError("beta_list must be finite");
  }
  if (!std::isfinite(distance_start) || distance_start < 0.0) {
    throw ValidationError("distance_start must be nonnegative");
  }
  if (!std::isfinite(distance_step) || distance_step <= 0.0) {
    throw ValidationError("distance_step must be positive");
  }
  if (!std::isfinite(distance_stop) || distance_stop < distance_start) {
    throw ValidationError("distance_stop must be at least distance_start");
  }
  if (n_pulses_list.empty()) {
    throw ValidationError("n_pulses_list must be nonempty");
  }
  for (double n : n_pulses_list) {
    if (!std::isfinite(n) || n < 1.0) {
      throw ValidationError("n_pulses_list entries must be at least 1");
    }
  }
  if (!std::isfinite(n_total) || n_total < 1.0) {
    throw ValidationError("n_total must be at least 1");
  }
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw ValidationError("gamma must be nonnegative");
  }
  if (n_starts < 1) throw ValidationError("n_starts must be at least 1");
  if (mode == ScanMode::Bb84Biased) {
    if (security_mode == SecurityMode::RfiLiteral) {
      throw ValidationError(
          "security_mode literal is incompatible with mode bb84-biased");
    }
  } else if (security_mode == SecurityMode::Bb84) {
    throw ValidationError("security_mode bb84 requires mode = bb84-biased");
  }
}

namespace {

SecurityMode effective_security(ScanMode mode, SecurityMode configured) {
  return mode == ScanMode::Bb84Biased ? SecurityMode::Bb84 : configured;
}

/// State of one (mode, beta) curve while walking the distance grid.
struct CurveState {
  ScanMode mode;
  Scenario scenario;
  OptimizerConfig optimizer;
  std::vector<ProtocolParams> warm;
  int zero_streak = 0;
  bool done = false;
};

CurveState make_curve(const ScanSpec& spec, ScanMode mode, double beta,
                      double n_pulses) {
  const SecurityConfig security(defaults::kReconciliationEfficiency,
                                effective_security(mode, spec.security_mode));
  return CurveState{
      mode,
      Scenario{reference_channel(beta), 0.0,
               FluctuationConfig(n_pulses, spec.gamma), security},
      OptimizerConfig{spec.n_starts, 200, 1e-6, spec.seed},
      {},
      0,
      false};
}

/// Optimize one grid point, record the row, and update the early-termination
/// streak. Zero-rate rows are kept; after three in a row the curve stops.
void step_curve(CurveState& curve, double beta, double distance,
                double n_pulses, std::vector<ScanRow>& rows) {
  curve.scenario.distance_km = distance;
  const OptimizationResult res =
      curve.mode == ScanMode::RfiUnbiased
          ? unbiased_baseline(curve.scenario)
          : optimize(curve.scenario, curve.optimizer, curve.warm);
  rows.push_back(to_scan_row(curve.mode, beta, distance, n_pulses, res));
  if (res.report.no_key) {
    if (++curve.zero_streak >= 3) curve.done = true;
  } else {
    curve.zero_streak = 0;
    curve.warm = {res.params};
  }
}

std::string loc(const std::string& path, int line_no) {
  return path + ":" + std::to_string(line_no);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& where, const std::string& key,
                    const std::string& text) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty()) {
    throw ValidationError(where + ": " + key + " expects a number (got '" +
                          text + "')");
  }
  return value;
}

std::vector<double> parse_number_list(const std::string& where,
                                      const std::string& key,
                                      const std::string& text) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    values.push_back(parse_number(where, key, trim(text.substr(start, end - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

std::uint64_t parse_seed(const std::string& where, const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw ValidationError(where + ": seed expects an unsigned integer (got '" +
                          text + "')");
  }
  return value;
}

}  // namespace

ScanRow to_scan_row(ScanMode mode, double beta, double distance_km,
                    double n_pulses, const OptimizationResult& result) {
  ScanRow row;
  row.mode = to_string(mode);
  row.beta_deg = beta;
  row.distance_km = distance_km;
  row.n_pulses = n_pulses;
  row.rate = result.report.rate;
  row.params = result.params;
  row.c_value = result.report.c_value;
  row.y1_zz_lower = result.report.y1_zz_lower;
  row.e1_zz_upper = result.report.e1_privacy_upper;
  row.i_e = result.report.i_e;
  row.no_key = result.report.no_key;
  return row;
}

OptimizationResult optimize_point(const ScanSpec& spec, double beta,
                                  double distance_km, double n_pulses) {
  spec.validate();
  CurveState curve = make_curve(spec, spec.mode, beta, n_pulses);
  curve.scenario.distance_km = distance_km;
  if (spec.mode == ScanMode::RfiUnbiased) {
    return unbiased_baseline(curve.scenario);
  }
  return optimize(curve.scenario, curve.optimizer);
}

std::vector<ScanRow> run_distance_scan(const ScanSpec& spec) {
  spec.validate();
  const std::vector<double> distances = spec.distance_grid();
  std::vector<ScanRow> rows;
  for (double beta : spec.beta_list) {
    CurveState curve = make_curve(spec, spec.mode, beta, spec.n_total);
    for (double d : distances) {
      if (curve.done) break;
      step_curve(curve, beta, d, spec.n_total, rows);
    }
  }
  return rows;
}

std::vector<ScanRow> run_pulse_scan(const ScanSpec& spec) {
  spec.validate();
  const double distance = spec.distance_start;
  std::vector<ScanRow> rows;
  for (double beta : spec.beta_list) {
    CurveState curve = make_curve(spec, spec.mode, beta, 1.0);
    for (double n : spec.n_pulses_list) {
      curve.scenario.fluctuation = FluctuationConfig(n, spec.gamma);
      curve.done = false;  // pulse grids are short; no early termination
      step_curve(curve, beta, distance, n, rows);
    }
  }
  return rows;
}

std::vector<ScanRow> run_comparison(const ScanSpec& spec) {
  spec.validate();
  const std::vector<double> distances = spec.distance_grid();
  std::vector<ScanRow> rows;
  for (double beta : spec.beta_list) {
    CurveState rfi = make_curve(spec, ScanMode::RfiBiased, beta, spec.n_total);
    CurveState bb84 =
        make_curve(spec, ScanMode::Bb84Biased, beta, spec.n_total);
    for (double d : distances) {
      if (rfi.done && bb84.done) break;
      if (!rfi.done) step_curve(rfi, beta, d, spec.n_total, rows);
      if (!bb84.done) step_curve(bb84, beta, d, spec.n_total, rows);
    }
  }
  return rows;
}

ScanSpec parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file: " + path);
  ScanSpec spec;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::string where = loc(path, line_no);
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(where + ": malformed line, expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ValidationError(where + ": malformed line, expected key = value");
    }
    try {
      if (key == "mode") {
        spec.mode = parse_scan_mode(value);
      } else if (key == "beta_list") {
        spec.beta_list = parse_number_list(where, key, value);
      } else if (key == "distance_start") {
        spec.distance_start = parse_number(where, key, value);
      } else if (key == "distance_stop") {
        spec.distance_stop = parse_number(where, key, value);
      } else if (key == "distance_step") {
        spec.distance_step = parse_number(where, key, value);
      } else if (key == "n_pulses_list") {
        spec.n_pulses_list = parse_number_list(where, key, value);
      } else if (key == "gamma") {
        spec.gamma = parse_number(where, key, value);
      } else if (key == "n_total") {
        spec.n_total = parse_number(where, key, value);
      } else if (key == "security_mode") {
        spec.security_mode = parse_security_mode(value);
      } else if (key == "n_starts") {
        const double n = parse_number(where, key, value);
        if (n != std::floor(n) || n < 1.0 || n > 1e6) {
          throw ValidationError(where + ": n_starts must be a small positive integer");
        }
        spec.n_starts = static_cast<int>(n);
      } else if (key == "seed") {
        spec.seed = parse_seed(where, value);
      } else if (key == "out") {
        spec.out = value;
      } else {
        throw ValidationError(where + ": unknown key '" + key + "'");
      }
    } catch (const ValidationError& e) {
      const std::string msg = e.what();
      if (msg.rfind(path + ":", 0) == 0) throw;
      throw ValidationError(where + ": " + msg);
    }
  }
  spec.validate();
  return spec;
}

std::string csv_header() {
  return "mode,beta_deg,distance_km,n_pulses,rate,mu,nu,p_mu,p_nu,p_za_mu,"
         "p_xa_mu,p_za_nu,p_xa_nu,p_zb,p_xb,c_value,y1_zz_lower,e1_zz_upper,"
         "i_e,no_key_flag";
}

namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void emit_csv(const std::vector<ScanRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out << csv_header() << '\n';
  for (const ScanRow& r : rows) {
    const ProtocolParams& p = r.params;
    out << r.mode << ',' << fmt(r.beta_deg) << ',' << fmt(r.distance_km)
        << ',' << fmt(r.n_pulses) << ',' << fmt(r.rate) << ',' << fmt(p.mu)
        << ',' << fmt(p.nu) << ',' << fmt(p.p_mu) << ',' << fmt(p.p_nu) << ','
        << fmt(p.p_za_mu) << ',' << fmt(p.p_xa_mu) << ',' << fmt(p.p_za_nu)
        << ',' << fmt(p.p_xa_nu) << ',' << fmt(p.p_zb) << ',' << fmt(p.p_xb)
        << ',' << fmt(r.c_value) << ',' << fmt(r.y1_zz_lower) << ','
        << fmt(r.e1_zz_upper) << ',' << fmt(r.i_e) << ','
        << (r.no_key ? '1' : '0') << '\n';
  }
  out.flush();
  if (!out.good()) throw ValidationError("failed writing output file: " + path);
}

}  // namespace rfiqkd
