#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlc/atmosphere.hpp"
#include "dlc/laser_source.hpp"
#include "dlc/pv_panel.hpp"

namespace dlc {

enum class EvalPath { ClosedForm, PhysicalModel };

/// One end-to-end scenario: transmitter diode, air condition, receiver panel
/// and its fitted line, plus the operating point (supply power, distance,
/// cell temperature).
struct ScenarioConfig {
  LaserDiodeParams diode;
  AtmosphereCondition condition;
  PvPanelParams panel;
  FittedMppLine mpp_line;
  double p_s_w;
  double d_km;
  double t_cell_c;
  EvalPath path = EvalPath::ClosedForm;
};

void validate(const ScenarioConfig& cfg);

/// Per-stage power/efficiency ledger. Reported efficiencies are clamped to
/// [0, 1] and powers to >= 0; eta_o_raw keeps the unclamped product for
/// algebraic cross-checks.
struct StageReport {
  double p_s_w = 0.0;
  double p_l_w = 0.0;
  double p_r_w = 0.0;
  double p_m_w = 0.0;
  double eta_el = 0.0;
  double eta_lt = 0.0;
  double eta_le = 0.0;
  double eta_o = 0.0;
  double eta_o_raw = 0.0;
  bool below_threshold = false;
};

struct UnreachableTargetError : std::runtime_error {
  UnreachableTargetError(const std::string& msg, double eta_at_zero_)
      : std::runtime_error(msg), eta_at_zero(eta_at_zero_) {}
  double eta_at_zero;
};

/// Full power chain p_s -> p_l -> p_r -> p_m with all four efficiencies.
/// ClosedForm uses the fitted lines; PhysicalModel solves the MPP on the
/// diode-equation curve.
StageReport run_scenario(const ScenarioConfig& cfg);

/// Maximum receiver power as a function of supply power,
/// a1*a2*eta_lt*p_s + (a2*b1*eta_lt + b2), clamped at zero.
double pm_vs_ps(const ScenarioConfig& cfg, double p_s_w);

/// Closed-form maximum end-to-end efficiency at the config distance.
double eta_om(const ScenarioConfig& cfg, double p_s_w);
double eta_om_raw(const ScenarioConfig& cfg, double p_s_w);

/// Same closed form evaluated at an explicit distance / transmission
/// efficiency (config p_s).
double eta_om_at_distance(const ScenarioConfig& cfg, double d_km);
double eta_om_for_eta_lt(const ScenarioConfig& cfg, double eta_lt_value);

/// Unique distance where eta_om falls to eta_target, by bisection on the
/// strictly decreasing curve; 1e-6 km tolerance. Throws
/// UnreachableTargetError (carrying eta_om at d=0) for unattainable targets.
double coverage_radius(const ScenarioConfig& cfg, double eta_target);

enum class SweepAxis {
  SupplyPower,
  Distance,
  ReceivedPower,
  Voltage,
  TransmissionEfficiency
};

struct SweepPoint {
  double axis_value = 0.0;
  bool ok = false;
  StageReport report;
  std::optional<OperatingPoint> op;  // Voltage axis only
  std::string error;
};

/// Evaluates the scenario along one axis. Per-point failures are recorded in
/// the point, not thrown.
std::vector<SweepPoint> sweep(const ScenarioConfig& cfg, SweepAxis axis,
                              std::span<const double> grid);

}  // namespace dlc
