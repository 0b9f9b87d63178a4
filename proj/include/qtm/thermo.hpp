#pragma once

#include <optional>
#include <vector>

#include "qtm/solvers.hpp"

namespace qtm {

// Tr[H_S G_piece rho] = eps_+ (G rho)_++ + eps_- (G rho)_--: the energy flow
// a single generator piece feeds into the system. Every current and power
// below is this functional of the matching piece, which is what makes the
// first law exact at steady state (the pieces sum to the full generator).
double energy_flow(const Superoperator& piece, const EigenBasis& eigen,
                   const StateVector& rho);

// Heat current out of bath `side` into the system; cooling the right
// reservoir reads J_R > 0.
double heat_current(const RateSet& rates, Side side, const EigenBasis& eigen,
                    Mode mode, const StateVector& rho);

// Power injected by the measurement back-action. In diagonal mode this
// reduces to Gamma_M sin^2 cos^2 (eps_+ - eps_-)(rho-- - rho++).
double measurement_power(const EigenBasis& eigen, double gamma_m, Mode mode,
                         const StateVector& rho);

// P_D = sum_m (d eps_m / d tau) rho_mm; the ground level is pinned at zero
// so only the eigenmodes contribute.
double driving_power(const StateVector& rho, const LevelVelocity& v);

// J_R / (P_D + J_M). nullopt when the denominator is not positive: the
// machine is not running as a refrigerator there, so the figure of merit is
// undefined rather than an error.
std::optional<double> cop(double j_R, double p_D, double j_M);
// Instantaneous-sector variant J_R_i / J_M_i.
std::optional<double> cop_instantaneous(double j_R_i, double j_M_i);

// Observables at one phase of a driven cycle, split into the
// frozen-parameter (instantaneous, _i) and first-order-in-frequency
// (adiabatic, _a) sectors. trace_i / trace_a record the solved states'
// population traces for normalization audits.
struct ThermoRecord {
    double tau = 0.0;
    double j_L_i = 0.0, j_L_a = 0.0;
    double j_R_i = 0.0, j_R_a = 0.0;
    double j_M_i = 0.0, j_M_a = 0.0;
    double p_D = 0.0;   // both sectors
    double p_D_a = 0.0; // adiabatic sector alone
    double trace_i = 0.0, trace_a = 0.0;

    double j_L() const { return j_L_i + j_L_a; }
    double j_R() const { return j_R_i + j_R_a; }
    double j_M() const { return j_M_i + j_M_a; }
};

// Cycle averages of ThermoRecord over one period on a uniform grid (the
// periodic trapezoid rule, i.e. the plain mean; spectrally accurate for
// these smooth integrands). w_M_a is the per-cycle measurement work
// (2 pi / omega) times the averaged adiabatic measurement power.
struct CycleSummary {
    std::vector<ThermoRecord> nodes;
    double j_L_i = 0.0, j_L_a = 0.0;
    double j_R_i = 0.0, j_R_a = 0.0;
    double j_M_i = 0.0, j_M_a = 0.0;
    double p_D = 0.0, p_D_a = 0.0;
    double w_M_a = 0.0;

    double j_L() const { return j_L_i + j_L_a; }
    double j_R() const { return j_R_i + j_R_a; }
    double j_M() const { return j_M_i + j_M_a; }
};

// Mean of samples of a smooth periodic function on a uniform grid covering
// one period (the periodic trapezoid rule).
double periodic_mean(const std::vector<double>& samples);

// Evaluates steady state + adiabatic correction at n_grid uniform phases of
// the protocol and averages. Requires n_grid >= 16 and a periodic protocol.
CycleSummary cycle_average(const Machine& m, const DriveProtocol& proto,
                           int n_grid);

// The loop connection of the pumped measurement work: Lambda_k =
// Tr[H_S L_M v_k] with G v_k = d rho_i / d e_k, evaluated at phase tau.
// Depends on the protocol only through the point (e_L, e_R) it visits.
struct GeometricConnection {
    double lambda_L = 0.0;
    double lambda_R = 0.0;
};
GeometricConnection geometric_connection(const Machine& m,
                                         const DriveProtocol& proto,
                                         double tau, double h_fd = 1e-5);

// Per-cycle pumped measurement work, twice: as the contour integral of the
// connection along the drive loop, and as period * averaged adiabatic
// measurement power. The two agree to quadrature accuracy; both are returned
// so callers can cross-check.
struct GeometricWork {
    double loop_integral = 0.0;
    double from_cycle = 0.0;
};
GeometricWork geometric_work(const Machine& m, const DriveProtocol& proto,
                             int n_grid);

// Adiabatic heat gained by the cold bath from driving and measuring
// together, beyond their separate contributions:
// j_R_a(gamma_m) - j_R_a(gamma_m = 0) on the same protocol and grid.
double interplay_current(const Machine& m, const DriveProtocol& proto,
                         int n_grid);

// Geometric-to-dissipative work ratio j_M_a / (j_M_i + p_D). Defined only
// at equal bath temperatures (std::invalid_argument otherwise); nullopt for
// a static protocol or a nonpositive denominator.
std::optional<double> kappa(const Machine& m, const DriveProtocol& proto,
                            int n_grid);

// One-stop cycle report: averages plus the derived figures of merit.
struct CycleAnalysis {
    CycleSummary cycle;
    double j_R_int = 0.0;
    std::optional<double> kappa; // equal bath temperatures only
    std::optional<double> cop_total;
    std::optional<double> cop_inst;
};
CycleAnalysis analyze_cycle(const Machine& m, const DriveProtocol& proto,
                            int n_grid);

} // namespace qtm
