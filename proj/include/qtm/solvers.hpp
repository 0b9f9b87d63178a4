#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qtm/machine.hpp"

namespace qtm {

struct Trajectory {
    std::vector<double> times;
    std::vector<StateVector> states;
    double dt = 0.0;
    std::uint64_t seed = 0; // stochastic runs only
};

// Classic fixed-step 4th-order Runge-Kutta for d rho/dt = G rho. The initial
// state is always recorded, then every sample_every-th step and the final
// one. t_end is truncated down to a whole number of steps.
// Requires dt * ||G||_inf < 0.5 (an easily checkable bound on dt times the
// spectral radius); larger steps throw std::invalid_argument.
Trajectory evolve_deterministic(const Superoperator& G, const StateVector& s0,
                                double t_end, double dt, int sample_every = 1);

// Euler-Maruyama for the record-keeping unraveling: drift G_det plus
// measurement_stochastic_increment with dW ~ Normal(0, dt). The noise stream
// is mt19937_64 seeded with `seed`, uniforms u1 = ((x >> 11) + 1) * 2^-53,
// u2 = (x >> 11) * 2^-53, paired through Box-Muller; this is pinned so runs
// are bit-reproducible across platforms and thread counts. A population
// leaving [-0.01, 1.01] aborts with numerical_error naming the step index
// (shrink dt rather than clamp, which would bias the statistics).
Trajectory evolve_stochastic(const Superoperator& G_det,
                             const EigenBasis& eigen, double gamma_m,
                             const StateVector& s0, double t_end, double dt,
                             std::uint64_t seed, int sample_every = 1);

// rho with G rho = 0 and unit population trace, via a dense LU solve with
// the redundant ground-population row replaced by the trace constraint.
// A degenerate steady manifold (singular bordered system, e.g. all rates
// zero) or a residual ||G rho||_inf above 1e-12 throws numerical_error
// with the kernel dimension diagnosed.
StateVector steady_state(const Superoperator& G);

// Traceless solution of G rho_a = rhs, the first-order correction of a
// slowly driven steady state. rhs must have |population trace| <= 1e-10
// (std::invalid_argument otherwise); the solution's trace is 0 exactly.
// The solve residual is judged on the non-replaced rows (row 0 carries the
// trace constraint, so its defect is the rhs trace defect); above 1e-11 it
// throws numerical_error, as does a singular bordered system.
StateVector adiabatic_correction(const Superoperator& G,
                                 const StateVector& rhs);

// Parameter derivatives of the frozen-parameter steady state at one phase of
// a protocol: central differences of the steady-state map over (e_L, e_R)
// with step h_fd, guarded by an h_fd/2 consistency check (relative
// disagreement above 1e-4 throws numerical_error), then chained with the
// drive velocities into d rho_i / d tau.
struct SteadyDerivative {
    StateVector d_tau;
    StateVector d_eL;
    StateVector d_eR;
};
SteadyDerivative steady_state_derivative(const Machine& m,
                                         const DriveProtocol& proto,
                                         double tau, double h_fd = 1e-5);

// Mean and standard error of f(t, state) over n_traj stochastic
// trajectories, trajectory i seeded with base_seed + i. Trajectories may run
// on several threads (n_threads = 0 picks the hardware count); the reduction
// runs serially in trajectory order, so the result is identical for every
// thread count.
struct EnsembleSeries {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> std_error;
    int n_trajectories = 0;
};
EnsembleSeries stochastic_ensemble(
    const Superoperator& G_det, const EigenBasis& eigen, double gamma_m,
    const StateVector& s0, double t_end, double dt, std::uint64_t base_seed,
    int n_traj, int sample_every,
    const std::function<double(double, const StateVector&)>& f,
    int n_threads = 0);

} // namespace qtm
