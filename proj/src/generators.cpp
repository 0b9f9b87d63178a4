#include "qtm/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace qtm {

Superoperator bath_generator(const RateSet& rates, Side side,
                             const EigenBasis& eigen, Mode mode) {
    const int d = state_dim(mode);
    Superoperator G = Superoperator::Zero(d, d);
    const double gu_p = rates.plus.up, gd_p = rates.plus.down;
    const double gu_m = rates.minus.up, gd_m = rates.minus.down;

    G(0, 0) = -(gu_p + gu_m);
    G(0, 1) = gd_p;
    G(0, 2) = gd_m;
    G(1, 0) = gu_p;
    G(1, 1) = -gd_p;
    G(2, 0) = gu_m;
    G(2, 2) = -gd_m;

    if (mode == Mode::coherent) {
        // Cross couplings between populations and Re rho+-. The two sides
        // enter with opposite orientation; the ground row balances the
        // eigenmode rows so the population columns still sum to zero.
        const double s2t = eigen.sin2t();
        const double sig = side == Side::L ? 1.0 : -1.0;
        const double gtu_p = rates.plus.tilde_up, gtd_p = rates.plus.tilde_down;
        const double gtu_m = rates.minus.tilde_up,
                     gtd_m = rates.minus.tilde_down;

        G(1, 3) += -0.5 * s2t * sig * gtd_m;
        G(2, 3) += -0.5 * s2t * sig * gtd_p;
        G(0, 3) += 0.5 * s2t * sig * (gtd_m + gtd_p);

        G(3, 0) += 0.25 * s2t * sig * (gtu_m + gtu_p);
        G(3, 1) += -0.25 * s2t * sig * gtd_p;
        G(3, 2) += -0.25 * s2t * sig * gtd_m;

        const double damp = -0.5 * (gd_m + gd_p);
        G(3, 3) += damp;
        G(4, 4) += damp;
    }
    return G;
}

Superoperator measurement_generator(const EigenBasis& eigen, double gamma_m,
                                    Mode mode) {
    if (gamma_m < 0.0)
        throw std::invalid_argument("measurement_generator: Gamma_M must be >= 0");
    const int d = state_dim(mode);
    Superoperator G = Superoperator::Zero(d, d);
    const double s = eigen.sin_t, c = eigen.cos_t;
    const double k = gamma_m * s * s * c * c;

    G(1, 1) = -k;
    G(1, 2) = k;
    G(2, 1) = k;
    G(2, 2) = -k;

    if (mode == Mode::coherent) {
        const double scc2 = s * c * eigen.cos2t();
        G(1, 3) = -gamma_m * scc2;
        G(2, 3) = gamma_m * scc2;
        G(3, 1) = -0.5 * gamma_m * scc2;
        G(3, 2) = 0.5 * gamma_m * scc2;
        G(3, 3) = gamma_m * (2.0 * s * s * c * c - 0.5);
        G(4, 4) = -0.5 * gamma_m;
    }
    return G;
}

Superoperator unitary_generator(const EigenBasis& eigen, Mode mode) {
    const int d = state_dim(mode);
    Superoperator G = Superoperator::Zero(d, d);
    if (mode == Mode::coherent) {
        const double epm = eigen.splitting();
        G(3, 4) = -epm;
        G(4, 3) = epm;
    }
    return G;
}

Superoperator total_generator(const Superoperator& bath_L,
                              const Superoperator& bath_R,
                              const Superoperator& measurement,
                              const Superoperator& unitary) {
    const auto n = bath_L.rows();
    if (bath_R.rows() != n || measurement.rows() != n || unitary.rows() != n)
        throw std::invalid_argument(
            "total_generator: parts were built in different modes");
    return bath_L + bath_R + measurement + unitary;
}

double detector_expectation(const StateVector& rho, const EigenBasis& eigen) {
    const double s = eigen.sin_t, c = eigen.cos_t;
    double x = s * s * rho[1] + c * c * rho[2];
    if (rho.size() == 5) x += 2.0 * s * c * rho[3];
    return x;
}

StateVector measurement_stochastic_increment(const StateVector& rho,
                                             const EigenBasis& eigen,
                                             double gamma_m, double dW,
                                             double dt) {
    if (dt <= 0.0)
        throw std::invalid_argument(
            "measurement_stochastic_increment: dt must be > 0");
    const double s = eigen.sin_t, c = eigen.cos_t;
    const double x = detector_expectation(rho, eigen);
    const double pref = std::sqrt(2.0 * gamma_m) * dW;

    StateVector inc = StateVector::Zero(rho.size());
    // (X rho + rho X)_mm, minus 2 <X> rho; the ground level has no overlap
    // with X so only the subtraction survives there.
    inc[0] = pref * (-2.0 * x * rho[0]);
    if (rho.size() == 5) {
        inc[1] = pref * (2.0 * s * s * rho[1] + 2.0 * s * c * rho[3] -
                         2.0 * x * rho[1]);
        inc[2] = pref * (2.0 * c * c * rho[2] + 2.0 * s * c * rho[3] -
                         2.0 * x * rho[2]);
        inc[3] = pref * (rho[3] + s * c * (rho[1] + rho[2]) - 2.0 * x * rho[3]);
        inc[4] = pref * (rho[4] - 2.0 * x * rho[4]);
    } else {
        inc[1] = pref * (2.0 * s * s * rho[1] - 2.0 * x * rho[1]);
        inc[2] = pref * (2.0 * c * c * rho[2] - 2.0 * x * rho[2]);
    }
    return inc;
}

} // namespace qtm
