#pragma once

#include <Eigen/Dense>

#include "qtm/baths.hpp"
#include "qtm/system.hpp"

namespace qtm {

// Real superoperator acting on the state vector
// (rho00, rho++, rho--[, Re rho+-, Im rho+-]).
using Superoperator = Eigen::MatrixXd;
using StateVector = Eigen::VectorXd;

// Population trace of a state (the coherence components carry no trace).
inline double trace_of(const StateVector& rho) {
    return rho[0] + rho[1] + rho[2];
}

// Dissipator of one bath. Diagonal mode: the 3x3 rate matrix between the
// ground level and the eigenmodes. Coherent mode adds the
// population<->coherence couplings with weight sin(2 theta)/4 on the bare
// rates and the coherence damping -(down_+ + down_-)/2. The side fixes the
// orientation of the cross couplings (L and R enter with opposite sign).
Superoperator bath_generator(const RateSet& rates, Side side,
                             const EigenBasis& eigen, Mode mode);

// Record-discarded dissipator of the continuous measurement of X = |R><R|.
// Population block: +-Gamma_M sin^2 cos^2 (rho-- - rho++); coherent mode
// adds the sin cos cos(2 theta) sources and the -Gamma_M/2 damping of c_im.
Superoperator measurement_generator(const EigenBasis& eigen, double gamma_m,
                                    Mode mode);

// Coherence rotation at the level splitting eps_+ - eps_-; zero matrix in
// diagonal mode (populations are untouched either way).
Superoperator unitary_generator(const EigenBasis& eigen, Mode mode);

// Elementwise sum; throws std::invalid_argument when the parts disagree in
// dimension (mode mismatch).
Superoperator total_generator(const Superoperator& bath_L,
                              const Superoperator& bath_R,
                              const Superoperator& measurement,
                              const Superoperator& unitary);

// <X> = sin^2 rho++ + cos^2 rho-- (+ 2 sin cos c_re in coherent mode).
double detector_expectation(const StateVector& rho, const EigenBasis& eigen);

// Record-conditioned innovation sqrt(2 Gamma_M)(X rho + rho X - 2<X> rho) dW
// restricted to the tracked components. Its population trace is exactly zero
// whenever trace_of(rho) == 1. dt only gates the contract (dt > 0); the step
// scale lives in dW ~ Normal(0, dt).
StateVector measurement_stochastic_increment(const StateVector& rho,
                                             const EigenBasis& eigen,
                                             double gamma_m, double dW,
                                             double dt);

} // namespace qtm
