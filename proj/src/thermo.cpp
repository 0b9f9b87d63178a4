#include "qtm/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "qtm/errors.hpp"

namespace qtm {

double energy_flow(const Superoperator& piece, const EigenBasis& eigen,
                   const StateVector& rho) {
    if (piece.rows() != rho.size())
        throw std::invalid_argument("energy_flow: mode mismatch");
    const StateVector r = piece * rho;
    return eigen.eps_plus * r[1] + eigen.eps_minus * r[2];
}

double heat_current(const RateSet& rates, Side side, const EigenBasis& eigen,
                    Mode mode, const StateVector& rho) {
    if (rho.size() != state_dim(mode))
        throw std::invalid_argument("heat_current: mode mismatch");
    return energy_flow(bath_generator(rates, side, eigen, mode), eigen, rho);
}

double measurement_power(const EigenBasis& eigen, double gamma_m, Mode mode,
                         const StateVector& rho) {
    if (rho.size() != state_dim(mode))
        throw std::invalid_argument("measurement_power: mode mismatch");
    return energy_flow(measurement_generator(eigen, gamma_m, mode), eigen, rho);
}

double driving_power(const StateVector& rho, const LevelVelocity& v) {
    return v.dplus * rho[1] + v.dminus * rho[2];
}

std::optional<double> cop(double j_R, double p_D, double j_M) {
    const double denom = p_D + j_M;
    if (!(denom > 0.0)) return std::nullopt;
    return j_R / denom;
}

std::optional<double> cop_instantaneous(double j_R_i, double j_M_i) {
    if (!(j_M_i > 0.0)) return std::nullopt;
    return j_R_i / j_M_i;
}

double periodic_mean(const std::vector<double>& samples) {
    if (samples.empty())
        throw std::invalid_argument("periodic_mean: no samples");
    double acc = 0.0;
    for (double s : samples) acc += s;
    return acc / static_cast<double>(samples.size());
}

CycleSummary cycle_average(const Machine& m, const DriveProtocol& proto,
                           int n_grid) {
    if (n_grid < 16)
        throw std::invalid_argument("cycle_average: n_grid must be >= 16");
    const double period = proto.period();

    CycleSummary out;
    out.nodes.reserve(n_grid);
    for (int j = 0; j < n_grid; ++j) {
        const double tau = period * j / n_grid;
        const DriveSample s = drive_at(proto, tau);
        const Machine::Built b = m.build(s.params);
        const StateVector rho_i = steady_state(b.total);
        const SteadyDerivative sd = steady_state_derivative(m, proto, tau);
        const StateVector rho_a = adiabatic_correction(b.total, sd.d_tau);
        const LevelVelocity v = level_velocity(b.eigen, s);

        ThermoRecord rec;
        rec.tau = tau;
        rec.j_L_i = energy_flow(b.gen_L, b.eigen, rho_i);
        rec.j_L_a = energy_flow(b.gen_L, b.eigen, rho_a);
        rec.j_R_i = energy_flow(b.gen_R, b.eigen, rho_i);
        rec.j_R_a = energy_flow(b.gen_R, b.eigen, rho_a);
        rec.j_M_i = energy_flow(b.gen_meas, b.eigen, rho_i);
        rec.j_M_a = energy_flow(b.gen_meas, b.eigen, rho_a);
        rec.p_D = driving_power(rho_i + rho_a, v);
        rec.p_D_a = driving_power(rho_a, v);
        rec.trace_i = trace_of(rho_i);
        rec.trace_a = trace_of(rho_a);
        out.nodes.push_back(rec);
    }

    const double n = static_cast<double>(n_grid);
    for (const ThermoRecord& r : out.nodes) {
        out.j_L_i += r.j_L_i / n;
        out.j_L_a += r.j_L_a / n;
        out.j_R_i += r.j_R_i / n;
        out.j_R_a += r.j_R_a / n;
        out.j_M_i += r.j_M_i / n;
        out.j_M_a += r.j_M_a / n;
        out.p_D += r.p_D / n;
        out.p_D_a += r.p_D_a / n;
    }
    out.w_M_a = period * out.j_M_a;
    return out;
}

GeometricConnection geometric_connection(const Machine& m,
                                         const DriveProtocol& proto,
                                         double tau, double h_fd) {
    const DriveSample s = drive_at(proto, tau);
    const Machine::Built b = m.build(s.params);
    const SteadyDerivative sd = steady_state_derivative(m, proto, tau, h_fd);
    const StateVector v_L = adiabatic_correction(b.total, sd.d_eL);
    const StateVector v_R = adiabatic_correction(b.total, sd.d_eR);
    GeometricConnection c;
    c.lambda_L = energy_flow(b.gen_meas, b.eigen, v_L);
    c.lambda_R = energy_flow(b.gen_meas, b.eigen, v_R);
    return c;
}

GeometricWork geometric_work(const Machine& m, const DriveProtocol& proto,
                             int n_grid) {
    if (n_grid < 16)
        throw std::invalid_argument("geometric_work: n_grid must be >= 16");
    const double period = proto.period(); // also rejects open (nonperiodic) input

    GeometricWork w;
    for (int j = 0; j < n_grid; ++j) {
        const double tau = period * j / n_grid;
        const DriveSample s = drive_at(proto, tau);
        const GeometricConnection c = geometric_connection(m, proto, tau);
        w.loop_integral +=
            (c.lambda_L * s.de_L + c.lambda_R * s.de_R) * (period / n_grid);
    }
    w.from_cycle = period * cycle_average(m, proto, n_grid).j_M_a;
    return w;
}

double interplay_current(const Machine& m, const DriveProtocol& proto,
                         int n_grid) {
    Machine off = m;
    off.gamma_m = 0.0;
    return cycle_average(m, proto, n_grid).j_R_a -
           cycle_average(off, proto, n_grid).j_R_a;
}

std::optional<double> kappa(const Machine& m, const DriveProtocol& proto,
                            int n_grid) {
    if (m.bath_L.temperature != m.bath_R.temperature)
        throw std::invalid_argument(
            "kappa: defined only for equal bath temperatures");
    if (proto.is_static()) return std::nullopt;
    const CycleSummary c = cycle_average(m, proto, n_grid);
    const double denom = c.j_M_i + c.p_D;
    if (!(denom > 0.0)) return std::nullopt;
    return c.j_M_a / denom;
}

CycleAnalysis analyze_cycle(const Machine& m, const DriveProtocol& proto,
                            int n_grid) {
    CycleAnalysis a;
    a.cycle = cycle_average(m, proto, n_grid);
    Machine off = m;
    off.gamma_m = 0.0;
    a.j_R_int = a.cycle.j_R_a - cycle_average(off, proto, n_grid).j_R_a;
    if (m.bath_L.temperature == m.bath_R.temperature &&
        !proto.is_static()) {
        const double denom = a.cycle.j_M_i + a.cycle.p_D;
        if (denom > 0.0) a.kappa = a.cycle.j_M_a / denom;
    }
    a.cop_total = cop(a.cycle.j_R(), a.cycle.p_D, a.cycle.j_M());
    a.cop_inst = cop_instantaneous(a.cycle.j_R_i, a.cycle.j_M_i);
    return a;
}

} // namespace qtm
