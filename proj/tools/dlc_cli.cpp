// Command-line front end. All numerics go through the shared-library C API;
// this tool only parses configuration, drives sweeps, and formats CSV.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dlc/dlc.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kExitUnreachable = 4;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(dlc_status status, const std::string& context) {
  if (status == DLC_OK) return;
  const std::string detail = std::string(dlc_last_error());
  const std::string message = context + ": " + detail;
  switch (status) {
    case DLC_ERROR_INVALID:
      fail(kExitConfig, message);
    case DLC_ERROR_DOMAIN:
      fail(kExitDomain, message);
    case DLC_ERROR_UNREACHABLE:
      fail(kExitUnreachable, message);
    default:
      fail(1, message);
  }
}

struct Config {
  double wavelength_nm = 810.0;
  double supply_power_w = 40.0;
  double distance_km = 0.0;
  std::string air_condition = "clear_air";
  double visibility_km = 0.0;  // 0 = regime default
  double cell_temperature_c = 25.0;
  std::string path = "closed_form";
  double received_power_w = 10.0;
  double eta_target = 0.15;
  double p_r_ref_w = 0.0;  // 0 = calibrated default
};

void apply_key(Config& cfg, const std::string& key, const json& value) {
  auto number = [&]() -> double {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
      try {
        std::size_t used = 0;
        const std::string s = value.get<std::string>();
        const double parsed = std::stod(s, &used);
        if (used == s.size()) return parsed;
      } catch (const std::exception&) {
      }
    }
    fail(kExitConfig, "config key '" + key + "' expects a number");
  };
  auto text = [&]() -> std::string {
    if (value.is_string()) return value.get<std::string>();
    fail(kExitConfig, "config key '" + key + "' expects a string");
  };

  if (key == "wavelength_nm") {
    cfg.wavelength_nm = number();
  } else if (key == "supply_power_w") {
    cfg.supply_power_w = number();
  } else if (key == "distance_km") {
    cfg.distance_km = number();
  } else if (key == "air_condition") {
    cfg.air_condition = text();
  } else if (key == "visibility_km") {
    cfg.visibility_km = number();
  } else if (key == "cell_temperature_c") {
    cfg.cell_temperature_c = number();
  } else if (key == "path") {
    cfg.path = text();
  } else if (key == "received_power_w") {
    cfg.received_power_w = number();
  } else if (key == "eta_target") {
    cfg.eta_target = number();
  } else if (key == "p_r_ref_w") {
    cfg.p_r_ref_w = number();
  } else {
    fail(kExitConfig, "unknown config key '" + key + "'");
  }
}

Config load_config(const std::string& config_path,
                   const std::vector<std::string>& overrides) {
  Config cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) fail(kExitConfig, "cannot open config file " + config_path);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      fail(kExitConfig, std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) fail(kExitConfig, "config must be a JSON object");
    for (const auto& [key, value] : doc.items()) apply_key(cfg, key, value);
  }
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      fail(kExitConfig, "--set expects key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string raw = item.substr(eq + 1);
    json value;
    try {
      std::size_t used = 0;
      const double parsed = std::stod(raw, &used);
      if (used == raw.size()) {
        value = parsed;
      } else {
        value = raw;
      }
    } catch (const std::exception&) {
      value = raw;
    }
    apply_key(cfg, key, value);
  }
  return cfg;
}

dlc_air air_from_name(const std::string& name) {
  if (name == "clear_air") return DLC_AIR_CLEAR;
  if (name == "haze") return DLC_AIR_HAZE;
  if (name == "fog") return DLC_AIR_FOG;
  fail(kExitConfig,
       "air_condition must be clear_air, haze, or fog (got '" + name + "')");
}

dlc_path path_from_name(const std::string& name) {
  if (name == "closed_form") return DLC_PATH_CLOSED_FORM;
  if (name == "physical") return DLC_PATH_PHYSICAL;
  fail(kExitConfig, "path must be closed_form or physical (got '" + name + "')");
}

// RAII handle over the C API scenario.
class Scenario {
 public:
  explicit Scenario(const dlc_scenario_desc& desc) {
    check(dlc_scenario_create(&desc, &handle_), "scenario setup failed");
  }
  ~Scenario() { dlc_scenario_destroy(handle_); }
  Scenario(const Scenario&) = delete;
  Scenario& operator=(const Scenario&) = delete;
  Scenario(Scenario&& other) noexcept : handle_(other.handle_) {
    other.handle_ = nullptr;
  }
  Scenario& operator=(Scenario&& other) noexcept {
    if (this != &other) {
      dlc_scenario_destroy(handle_);
      handle_ = other.handle_;
      other.handle_ = nullptr;
    }
    return *this;
  }
  const dlc_scenario* get() const { return handle_; }

 private:
  dlc_scenario* handle_ = nullptr;
};

dlc_scenario_desc desc_from_config(const Config& cfg) {
  dlc_scenario_desc desc{};
  desc.wavelength_nm = cfg.wavelength_nm;
  desc.air = air_from_name(cfg.air_condition);
  desc.visibility_km = cfg.visibility_km;
  desc.supply_power_w = cfg.supply_power_w;
  desc.distance_km = cfg.distance_km;
  desc.cell_temperature_c = cfg.cell_temperature_c;
  desc.path = path_from_name(cfg.path);
  desc.p_r_ref_w = cfg.p_r_ref_w;
  return desc;
}

std::string fmt(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

// Accumulates CSV text; rows end with '\n' regardless of platform.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) body_ += ',';
      body_ += cells[i];
    }
    body_ += '\n';
    ++rows_;
  }
  // Header plus data rows; rows() reports data rows only.
  std::size_t rows() const { return rows_ > 0 ? rows_ - 1 : 0; }
  const std::string& text() const { return body_; }

 private:
  std::string body_;
  std::size_t rows_ = 0;
};

void emit(const CsvWriter& csv, const std::string& out_path,
          bool print_manifest) {
  if (out_path.empty()) {
    std::cout << csv.text();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(1, "cannot open output file " + out_path);
  out << csv.text();
  out.close();
  if (print_manifest) {
    char checksum[20];
    std::snprintf(checksum, sizeof(checksum), "%016llx",
                  static_cast<unsigned long long>(fnv1a(csv.text())));
    std::cout << "wrote " << out_path << " rows=" << csv.rows()
              << " checksum=" << checksum << "\n";
  }
}

std::vector<double> linspace(double from, double to, std::size_t points) {
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = from;
    return grid;
  }
  const double step = (to - from) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = from + step * static_cast<double>(i);
  }
  return grid;
}

void report_row(CsvWriter& csv, const dlc_stage_report& r) {
  csv.row({fmt(r.p_s_w), fmt(r.p_l_w), fmt(r.p_r_w), fmt(r.p_m_w),
           fmt(r.eta_el), fmt(r.eta_lt), fmt(r.eta_le), fmt(r.eta_o),
           r.below_threshold ? "1" : "0"});
}

const std::vector<std::string> kReportHeader = {
    "p_s_w",  "p_l_w",  "p_r_w",  "p_m_w",          "eta_el",
    "eta_lt", "eta_le", "eta_o",  "below_threshold"};

// ---------------------------------------------------------------------------
// figure datasets

Scenario scenario_for(const Config& base, double wavelength_nm,
                      double temperature_c, double distance_km) {
  Config cfg = base;
  cfg.wavelength_nm = wavelength_nm;
  cfg.cell_temperature_c = temperature_c;
  cfg.distance_km = distance_km;
  return Scenario(desc_from_config(cfg));
}

// Distance producing a requested transmission efficiency under the scenario's
// own attenuation coefficient.
double distance_for_eta_lt(const Config& base, double wavelength_nm,
                           double eta_lt_value) {
  Scenario probe = scenario_for(base, wavelength_nm, base.cell_temperature_c,
                                0.0);
  double alpha = 0.0;
  check(dlc_attenuation_coefficient(probe.get(), &alpha), "attenuation");
  return -std::log(eta_lt_value) / alpha;
}

void figure_eta_el_vs_ps(const Config& cfg, CsvWriter& csv) {
  Scenario s810 = scenario_for(cfg, 810.0, cfg.cell_temperature_c, 0.0);
  Scenario s1550 = scenario_for(cfg, 1550.0, cfg.cell_temperature_c, 0.0);
  csv.row({"p_s_w", "eta_el_810nm", "eta_el_1550nm"});
  for (double p_s : linspace(2.0, 100.0, 197)) {
    double e810 = 0.0, e1550 = 0.0;
    check(dlc_eta_el(s810.get(), p_s, &e810), "eta_el");
    check(dlc_eta_el(s1550.get(), p_s, &e1550), "eta_el");
    csv.row({fmt(p_s), fmt(e810), fmt(e1550)});
  }
}

void figure_eta_lt_vs_d(const Config& cfg, CsvWriter& csv) {
  Scenario s810 = scenario_for(cfg, 810.0, cfg.cell_temperature_c, 0.0);
  Scenario s1550 = scenario_for(cfg, 1550.0, cfg.cell_temperature_c, 0.0);
  csv.row({"d_km", "eta_lt_810nm", "eta_lt_1550nm"});
  for (double d : linspace(0.0, 10.0, 1001)) {
    double e810 = 0.0, e1550 = 0.0;
    check(dlc_eta_lt(s810.get(), d, &e810), "eta_lt");
    check(dlc_eta_lt(s1550.get(), d, &e1550), "eta_lt");
    csv.row({fmt(d), fmt(e810), fmt(e1550)});
  }
}

void figure_iv_or_p_vs_v(const Config& cfg, CsvWriter& csv, bool power) {
  const std::vector<double> p_r_values = {2.5, 5.0, 10.0, 15.0, 20.0};
  Scenario s = scenario_for(cfg, cfg.wavelength_nm, cfg.cell_temperature_c,
                            cfg.distance_km);
  double v_max = 0.0;
  check(dlc_open_circuit_voltage(s.get(), p_r_values.back(), &v_max),
        "open-circuit voltage");

  std::vector<std::string> header = {"v_o_v"};
  for (double p_r : p_r_values) {
    header.push_back((power ? "p_o_w_pr" : "i_o_a_pr") + fmt(p_r) + "w");
  }
  csv.row(header);
  for (double v : linspace(0.0, v_max, 501)) {
    std::vector<std::string> cells = {fmt(v)};
    for (double p_r : p_r_values) {
      dlc_operating_point op{};
      check(dlc_iv_curve(s.get(), p_r, v, &op), "iv_curve");
      cells.push_back(fmt(power ? op.p_o_w : op.i_o_a));
    }
    csv.row(cells);
  }
}

void figure_vs_pr(const Config& cfg, CsvWriter& csv, bool efficiency) {
  const std::vector<double> temps = {0.0, 25.0, 50.0};
  std::vector<std::string> header = {"p_r_w"};
  std::vector<Scenario> scenarios;
  scenarios.reserve(temps.size());
  for (double t : temps) {
    scenarios.emplace_back(
        scenario_for(cfg, cfg.wavelength_nm, t, cfg.distance_km));
    header.push_back((efficiency ? "eta_lem_t" : "p_m_w_t") + fmt(t) + "c");
  }
  const bool physical = cfg.path == "physical";
  csv.row(header);
  for (double p_r : linspace(2.0, 20.0, 73)) {
    std::vector<std::string> cells = {fmt(p_r)};
    for (std::size_t i = 0; i < temps.size(); ++i) {
      double value = 0.0;
      if (efficiency) {
        check(dlc_eta_lem(scenarios[i].get(), p_r, &value), "eta_lem");
      } else if (physical) {
        dlc_operating_point op{};
        check(dlc_find_mpp(scenarios[i].get(), p_r, &op), "find_mpp");
        value = op.p_o_w;
      } else {
        check(dlc_mpp_from_fit(scenarios[i].get(), p_r, &value),
              "mpp_from_fit");
      }
      cells.push_back(fmt(value));
    }
    csv.row(cells);
  }
}

void figure_vs_ps(const Config& cfg, CsvWriter& csv, bool efficiency) {
  const std::vector<double> lt_values = {1.0, 0.5};
  const std::vector<double> temps = {0.0, 25.0, 50.0};
  std::vector<std::string> header = {"p_s_w"};
  std::vector<Scenario> scenarios;
  for (double lt : lt_values) {
    const double d =
        lt == 1.0 ? 0.0 : distance_for_eta_lt(cfg, cfg.wavelength_nm, lt);
    for (double t : temps) {
      scenarios.emplace_back(scenario_for(cfg, cfg.wavelength_nm, t, d));
      header.push_back((efficiency ? "eta_om_lt" : "p_m_w_lt") + fmt(lt * 100) +
                       "_t" + fmt(t) + "c");
    }
  }
  csv.row(header);
  const auto grid =
      efficiency ? linspace(5.0, 200.0, 391) : linspace(5.0, 100.0, 191);
  for (double p_s : grid) {
    std::vector<std::string> cells = {fmt(p_s)};
    for (const Scenario& s : scenarios) {
      double value = 0.0;
      if (efficiency) {
        check(dlc_eta_om(s.get(), p_s, &value), "eta_om");
      } else {
        check(dlc_pm_vs_ps(s.get(), p_s, &value), "pm_vs_ps");
      }
      cells.push_back(fmt(value));
    }
    csv.row(cells);
  }
}

void figure_eta_om_vs_d(const Config& cfg, CsvWriter& csv) {
  const std::vector<double> wavelengths = {810.0, 1550.0};
  const std::vector<double> temps = {0.0, 25.0, 50.0};
  std::vector<std::string> header = {"d_km"};
  std::vector<Scenario> scenarios;
  for (double wl : wavelengths) {
    for (double t : temps) {
      scenarios.emplace_back(scenario_for(cfg, wl, t, 0.0));
      header.push_back("eta_om_" + fmt(wl) + "nm_t" + fmt(t) + "c");
    }
  }
  csv.row(header);
  for (double d : linspace(0.0, 40.0, 4001)) {
    std::vector<std::string> cells = {fmt(d)};
    for (const Scenario& s : scenarios) {
      double value = 0.0;
      check(dlc_eta_om_at_distance(s.get(), d, &value), "eta_om");
      cells.push_back(fmt(value));
    }
    csv.row(cells);
  }
}

void figure_eta_om_vs_eta_lt(const Config& cfg, CsvWriter& csv) {
  const std::vector<double> wavelengths = {810.0, 1550.0};
  const std::vector<double> temps = {0.0, 25.0, 50.0};
  std::vector<std::string> header = {"eta_lt"};
  std::vector<Scenario> scenarios;
  for (double wl : wavelengths) {
    for (double t : temps) {
      scenarios.emplace_back(scenario_for(cfg, wl, t, 0.0));
      header.push_back("eta_om_" + fmt(wl) + "nm_t" + fmt(t) + "c");
    }
  }
  csv.row(header);
  for (double lt : linspace(0.1, 1.0, 91)) {
    std::vector<std::string> cells = {fmt(lt)};
    for (const Scenario& s : scenarios) {
      double value = 0.0;
      check(dlc_eta_om_for_eta_lt(s.get(), lt, &value), "eta_om");
      cells.push_back(fmt(value));
    }
    csv.row(cells);
  }
}

void run_figure(const std::string& figure_id, const Config& cfg,
                CsvWriter& csv) {
  if (figure_id == "eta_el_vs_ps") {
    figure_eta_el_vs_ps(cfg, csv);
  } else if (figure_id == "eta_lt_vs_d") {
    figure_eta_lt_vs_d(cfg, csv);
  } else if (figure_id == "iv_vs_v") {
    figure_iv_or_p_vs_v(cfg, csv, /*power=*/false);
  } else if (figure_id == "p_vs_v") {
    figure_iv_or_p_vs_v(cfg, csv, /*power=*/true);
  } else if (figure_id == "pm_vs_pr") {
    figure_vs_pr(cfg, csv, /*efficiency=*/false);
  } else if (figure_id == "eta_lem_vs_pr") {
    figure_vs_pr(cfg, csv, /*efficiency=*/true);
  } else if (figure_id == "pm_vs_ps") {
    figure_vs_ps(cfg, csv, /*efficiency=*/false);
  } else if (figure_id == "eta_om_vs_ps") {
    figure_vs_ps(cfg, csv, /*efficiency=*/true);
  } else if (figure_id == "eta_om_vs_d") {
    figure_eta_om_vs_d(cfg, csv);
  } else if (figure_id == "eta_om_vs_eta_lt") {
    figure_eta_om_vs_eta_lt(cfg, csv);
  } else {
    fail(kExitConfig, "unknown figure id '" + figure_id + "'");
  }
}

// ---------------------------------------------------------------------------
// scalar subcommands

void cmd_efficiency(const Config& cfg, CsvWriter& csv) {
  Scenario s(desc_from_config(cfg));
  dlc_stage_report report{};
  check(dlc_run_scenario(s.get(), &report), "efficiency");
  csv.row(kReportHeader);
  report_row(csv, report);
}

void cmd_mpp(const Config& cfg, CsvWriter& csv) {
  Scenario s(desc_from_config(cfg));
  dlc_operating_point op{};
  check(dlc_find_mpp(s.get(), cfg.received_power_w, &op), "find_mpp");
  double p_m_fit = 0.0, lem = 0.0;
  check(dlc_mpp_from_fit(s.get(), cfg.received_power_w, &p_m_fit),
        "mpp_from_fit");
  check(dlc_eta_lem(s.get(), cfg.received_power_w, &lem), "eta_lem");
  csv.row({"p_r_w", "v_o_v", "i_o_a", "p_m_w", "p_m_fit_w", "eta_lem"});
  csv.row({fmt(cfg.received_power_w), fmt(op.v_o_v), fmt(op.i_o_a),
           fmt(op.p_o_w), fmt(p_m_fit), fmt(lem)});
}

void cmd_attenuation(const Config& cfg, CsvWriter& csv) {
  Scenario s(desc_from_config(cfg));
  double rho = 0.0, alpha = 0.0, lt = 0.0;
  check(dlc_size_distribution_rho(s.get(), &rho), "rho");
  check(dlc_attenuation_coefficient(s.get(), &alpha), "attenuation");
  check(dlc_eta_lt(s.get(), cfg.distance_km, &lt), "eta_lt");
  csv.row({"wavelength_nm", "kappa_km", "rho", "alpha_per_km", "d_km",
           "eta_lt"});
  const double kappa =
      cfg.visibility_km > 0.0
          ? cfg.visibility_km
          : (cfg.air_condition == "haze" ? 3.0
             : cfg.air_condition == "fog" ? 0.4
                                          : 10.0);
  csv.row({fmt(cfg.wavelength_nm), fmt(kappa), fmt(rho), fmt(alpha),
           fmt(cfg.distance_km), fmt(lt)});
}

void cmd_coverage(const Config& cfg, CsvWriter& csv) {
  Scenario s(desc_from_config(cfg));
  double d_km = 0.0, eta_at_zero = 0.0;
  const dlc_status status =
      dlc_coverage_radius(s.get(), cfg.eta_target, &d_km, &eta_at_zero);
  if (status == DLC_ERROR_UNREACHABLE) {
    fail(kExitUnreachable,
         std::string("coverage: ") + dlc_last_error());
  }
  check(status, "coverage");
  csv.row({"eta_target", "d_km", "eta_om_at_zero"});
  csv.row({fmt(cfg.eta_target), fmt(d_km), fmt(eta_at_zero)});
}

void cmd_fit(const std::string& samples_path, CsvWriter& csv) {
  std::ifstream in(samples_path);
  if (!in) fail(kExitConfig, "cannot open samples file " + samples_path);
  std::string line;
  if (!std::getline(in, line) || (line != "x,y" && line != "x,y\r")) {
    fail(kExitConfig, "samples file must start with an 'x,y' header");
  }
  std::vector<double> xs, ys;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b)) {
      fail(kExitConfig,
           "malformed row at line " + std::to_string(line_no));
    }
    try {
      xs.push_back(std::stod(a));
      ys.push_back(std::stod(b));
    } catch (const std::exception&) {
      fail(kExitConfig,
           "non-numeric value at line " + std::to_string(line_no));
    }
  }
  double slope = 0.0, intercept = 0.0, r2 = 0.0;
  const dlc_status status =
      dlc_fit_line(xs.data(), ys.data(), xs.size(), &slope, &intercept, &r2);
  if (status == DLC_ERROR_INVALID) {
    fail(kExitConfig, std::string("fit: ") + dlc_last_error());
  }
  check(status, "fit");
  csv.row({"slope", "intercept", "r_squared", "n_samples"});
  csv.row({fmt(slope), fmt(intercept), fmt(r2), std::to_string(xs.size())});
}

void cmd_sweep(const Config& cfg, const std::string& axis_name, double from,
               double to, std::size_t points, CsvWriter& csv) {
  dlc_axis axis;
  if (axis_name == "supply_power") {
    axis = DLC_AXIS_SUPPLY_POWER;
  } else if (axis_name == "distance") {
    axis = DLC_AXIS_DISTANCE;
  } else if (axis_name == "received_power") {
    axis = DLC_AXIS_RECEIVED_POWER;
  } else if (axis_name == "voltage") {
    axis = DLC_AXIS_VOLTAGE;
  } else if (axis_name == "transmission") {
    axis = DLC_AXIS_TRANSMISSION;
  } else {
    fail(kExitConfig, "unknown sweep axis '" + axis_name + "'");
  }
  if (points == 0) fail(kExitConfig, "sweep needs at least one point");

  Scenario s(desc_from_config(cfg));
  const std::vector<double> grid = linspace(from, to, points);
  std::vector<dlc_stage_report> reports(grid.size());
  std::vector<dlc_operating_point> ops(grid.size());
  std::vector<int> ok(grid.size());
  check(dlc_sweep(s.get(), axis, grid.data(), grid.size(), reports.data(),
                  ops.data(), ok.data()),
        "sweep");

  std::vector<std::string> header = {"axis_value"};
  header.insert(header.end(), kReportHeader.begin(), kReportHeader.end());
  if (axis == DLC_AXIS_VOLTAGE) {
    header.insert(header.end(), {"v_o_v", "i_o_a", "p_o_w"});
  }
  header.push_back("ok");
  csv.row(header);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> cells = {fmt(grid[i])};
    const dlc_stage_report& r = reports[i];
    for (const std::string& cell :
         {fmt(r.p_s_w), fmt(r.p_l_w), fmt(r.p_r_w), fmt(r.p_m_w),
          fmt(r.eta_el), fmt(r.eta_lt), fmt(r.eta_le), fmt(r.eta_o),
          std::string(r.below_threshold ? "1" : "0")}) {
      cells.push_back(cell);
    }
    if (axis == DLC_AXIS_VOLTAGE) {
      cells.push_back(fmt(ops[i].v_o_v));
      cells.push_back(fmt(ops[i].i_o_a));
      cells.push_back(fmt(ops[i].p_o_w));
    }
    cells.push_back(ok[i] ? "1" : "0");
    csv.row(cells);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laser charging efficiency model"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--out", out_path, "output CSV path (default: stdout)");
  app.add_option("--set", overrides, "override config keys, key=value");

  auto* efficiency = app.add_subcommand(
      "efficiency", "end-to-end stage report for one scenario");
  auto* figure =
      app.add_subcommand("figure", "emit a figure-reproduction dataset");
  std::string figure_id;
  figure->add_option("id", figure_id, "figure dataset id")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "sweep one scenario axis");
  std::string axis_name = "supply_power";
  double sweep_from = 5.0, sweep_to = 100.0;
  std::size_t sweep_points = 96;
  sweep_cmd->add_option("--axis", axis_name,
                        "supply_power|distance|received_power|voltage|"
                        "transmission");
  sweep_cmd->add_option("--from", sweep_from, "grid start");
  sweep_cmd->add_option("--to", sweep_to, "grid end");
  sweep_cmd->add_option("--points", sweep_points, "grid size");
  auto* mpp = app.add_subcommand("mpp", "maximum power point at p_r");
  auto* attenuation =
      app.add_subcommand("attenuation", "extinction parameters");
  auto* fit = app.add_subcommand("fit", "least-squares line through x,y CSV");
  std::string samples_path;
  fit->add_option("samples", samples_path, "CSV file with x,y header")
      ->required();
  auto* coverage =
      app.add_subcommand("coverage", "distance where eta_om hits the target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    const Config cfg = load_config(config_path, overrides);
    CsvWriter csv;
    bool manifest = false;
    if (efficiency->parsed()) {
      cmd_efficiency(cfg, csv);
    } else if (figure->parsed()) {
      if (out_path.empty()) out_path = figure_id + ".csv";
      manifest = true;
      run_figure(figure_id, cfg, csv);
    } else if (sweep_cmd->parsed()) {
      cmd_sweep(cfg, axis_name, sweep_from, sweep_to, sweep_points, csv);
    } else if (mpp->parsed()) {
      cmd_mpp(cfg, csv);
    } else if (attenuation->parsed()) {
      cmd_attenuation(cfg, csv);
    } else if (fit->parsed()) {
      cmd_fit(samples_path, csv);
    } else if (coverage->parsed()) {
      cmd_coverage(cfg, csv);
    }
    emit(csv, out_path, manifest);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
