#include "qtm/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qtm/errors.hpp"

namespace qtm {

namespace {

constexpr double kTwoPow53 = 9007199254740992.0; // 2^53

// Gaussian stream with a pinned algorithm (Box-Muller over mt19937_64), so
// trajectories reproduce bit-exactly everywhere; std::normal_distribution is
// implementation-defined and would not.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) / kTwoPow53;
        const double u2 = static_cast<double>(eng_() >> 11) / kTwoPow53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_ = true;
        return r * std::cos(a);
    }

  private:
    std::mt19937_64 eng_;
    bool have_ = false;
    double cached_ = 0.0;
};

long step_count(double t_end, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("time step must be > 0");
    if (t_end < 0.0) throw std::invalid_argument("t_end must be >= 0");
    return static_cast<long>(std::floor(t_end / dt + 1e-9));
}

void check_sampling(int sample_every) {
    if (sample_every < 1)
        throw std::invalid_argument("sample_every must be >= 1");
}

// Bordered system: ground-population row traded for the trace constraint.
// That row is redundant whenever the generator preserves trace, so nothing
// is lost.
Eigen::MatrixXd with_trace_row(const Superoperator& G) {
    Eigen::MatrixXd A = G;
    A.row(0).setZero();
    A(0, 0) = A(0, 1) = A(0, 2) = 1.0;
    return A;
}

[[noreturn]] void diagnose_singular(const Superoperator& G, const char* op,
                                    double residual, double tol) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
    lu.setThreshold(1e-10);
    std::ostringstream msg;
    msg << op << ": ";
    if (lu.rank() < G.rows() - 1)
        msg << "generator kernel has dimension " << (G.rows() - lu.rank())
            << " (degenerate steady manifold, e.g. all rates zero)";
    else if (tol > 0.0)
        msg << "solve residual " << residual << " exceeds " << tol;
    else
        msg << "trace constraint does not pin a unique state (kernel vector "
               "is traceless)";
    throw numerical_error(msg.str());
}

} // namespace

Trajectory evolve_deterministic(const Superoperator& G, const StateVector& s0,
                                double t_end, double dt, int sample_every) {
    check_sampling(sample_every);
    if (s0.size() != G.rows())
        throw std::invalid_argument("state dimension does not match generator");
    const double rate_bound = G.cwiseAbs().rowwise().sum().maxCoeff();
    if (dt * rate_bound >= 0.5)
        throw std::invalid_argument(
            "evolve_deterministic: dt too large for the generator's fastest "
            "rate (need dt * ||G||_inf < 0.5)");

    const long n = step_count(t_end, dt);
    Trajectory traj;
    traj.dt = dt;
    traj.times.push_back(0.0);
    traj.states.push_back(s0);

    StateVector rho = s0;
    for (long k = 0; k < n; ++k) {
        const StateVector k1 = G * rho;
        const StateVector k2 = G * (rho + 0.5 * dt * k1);
        const StateVector k3 = G * (rho + 0.5 * dt * k2);
        const StateVector k4 = G * (rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((k + 1) % sample_every == 0 || k + 1 == n) {
            traj.times.push_back((k + 1) * dt);
            traj.states.push_back(rho);
        }
    }
    return traj;
}

Trajectory evolve_stochastic(const Superoperator& G_det,
                             const EigenBasis& eigen, double gamma_m,
                             const StateVector& s0, double t_end, double dt,
                             std::uint64_t seed, int sample_every) {
    check_sampling(sample_every);
    if (s0.size() != G_det.rows())
        throw std::invalid_argument("state dimension does not match generator");
    const long n = step_count(t_end, dt);
    const double sqrt_dt = std::sqrt(dt);
    NormalStream noise(seed);

    Trajectory traj;
    traj.dt = dt;
    traj.seed = seed;
    traj.times.push_back(0.0);
    traj.states.push_back(s0);

    StateVector rho = s0;
    for (long k = 0; k < n; ++k) {
        const double dW = sqrt_dt * noise.next();
        rho += dt * (G_det * rho) +
               measurement_stochastic_increment(rho, eigen, gamma_m, dW, dt);
        for (int i = 0; i < 3; ++i) {
            if (!(rho[i] >= -0.01 && rho[i] <= 1.01)) {
                std::ostringstream msg;
                msg << "evolve_stochastic: population " << i
                    << " left the guard band [-0.01, 1.01] at step " << k + 1
                    << " (t = " << (k + 1) * dt << "); reduce dt";
                throw numerical_error(msg.str());
            }
        }
        if ((k + 1) % sample_every == 0 || k + 1 == n) {
            traj.times.push_back((k + 1) * dt);
            traj.states.push_back(rho);
        }
    }
    return traj;
}

StateVector steady_state(const Superoperator& G) {
    Eigen::MatrixXd A = with_trace_row(G);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    // A singular bordered system means the trace constraint did not pin a
    // unique state; the residual alone cannot see that (the solve can land
    // on one member of a degenerate manifold).
    if (!lu.isInvertible()) diagnose_singular(G, "steady_state", 0.0, 0.0);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(G.rows());
    b[0] = 1.0;
    const StateVector rho = lu.solve(b);
    const double residual = (G * rho).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-12))
        diagnose_singular(G, "steady_state", residual, 1e-12);
    return rho;
}

StateVector adiabatic_correction(const Superoperator& G,
                                 const StateVector& rhs) {
    if (rhs.size() != G.rows())
        throw std::invalid_argument("rhs dimension does not match generator");
    const double tr = trace_of(rhs);
    if (std::abs(tr) > 1e-10)
        throw std::invalid_argument(
            "adiabatic_correction: rhs must be traceless (|trace| = " +
            std::to_string(std::abs(tr)) + ")");
    Eigen::MatrixXd A = with_trace_row(G);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible())
        diagnose_singular(G, "adiabatic_correction", 0.0, 0.0);
    Eigen::VectorXd b = rhs;
    b[0] = 0.0;
    const StateVector sol = lu.solve(b);
    // Row 0 was traded for the trace constraint, so its defect is just the
    // rhs trace defect (already bounded above); judge the solve on the rows
    // it actually solved.
    const StateVector res = G * sol - rhs;
    const double residual = res.tail(res.size() - 1).cwiseAbs().maxCoeff();
    if (!(residual <= 1e-11))
        diagnose_singular(G, "adiabatic_correction", residual, 1e-11);
    return sol;
}

namespace {

// One central-difference pass over (e_L, e_R) at fixed coupling.
std::pair<StateVector, StateVector> central_pass(const Machine& m,
                                                 const SystemParams& p,
                                                 double h) {
    auto smap = [&](double eL, double eR) {
        return steady_state(m.build({eL, eR, p.coupling}).total);
    };
    const StateVector d_eL = (smap(p.e_L + h, p.e_R) - smap(p.e_L - h, p.e_R)) / (2.0 * h);
    const StateVector d_eR = (smap(p.e_L, p.e_R + h) - smap(p.e_L, p.e_R - h)) / (2.0 * h);
    return {d_eL, d_eR};
}

void richardson_guard(const StateVector& coarse, const StateVector& fine,
                      const char* which) {
    const double err = (coarse - fine).cwiseAbs().maxCoeff();
    const double scale = std::max(fine.cwiseAbs().maxCoeff(), 1e-12);
    if (!(err / scale <= 1e-4)) {
        std::ostringstream msg;
        msg << "steady_state_derivative: finite difference for " << which
            << " failed the half-step consistency check (relative "
            << err / scale << ")";
        throw numerical_error(msg.str());
    }
}

} // namespace

SteadyDerivative steady_state_derivative(const Machine& m,
                                         const DriveProtocol& proto,
                                         double tau, double h_fd) {
    if (h_fd <= 0.0)
        throw std::invalid_argument("steady_state_derivative: h_fd must be > 0");
    const DriveSample s = drive_at(proto, tau);
    const auto [d_eL, d_eR] = central_pass(m, s.params, h_fd);
    const auto [d_eL_half, d_eR_half] = central_pass(m, s.params, 0.5 * h_fd);
    richardson_guard(d_eL, d_eL_half, "d/de_L");
    richardson_guard(d_eR, d_eR_half, "d/de_R");

    SteadyDerivative out;
    out.d_eL = d_eL;
    out.d_eR = d_eR;
    out.d_tau = d_eL * s.de_L + d_eR * s.de_R;
    return out;
}

EnsembleSeries stochastic_ensemble(
    const Superoperator& G_det, const EigenBasis& eigen, double gamma_m,
    const StateVector& s0, double t_end, double dt, std::uint64_t base_seed,
    int n_traj, int sample_every,
    const std::function<double(double, const StateVector&)>& f,
    int n_threads) {
    if (n_traj < 1)
        throw std::invalid_argument("stochastic_ensemble: need n_traj >= 1");
    if (n_threads <= 0) {
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
        if (n_threads < 1) n_threads = 1;
    }
    n_threads = std::min(n_threads, n_traj);

    // Each trajectory writes its own sample slot; any scheduling works
    // because the reduction below runs in index order.
    std::vector<std::vector<double>> samples(n_traj);
    std::vector<std::exception_ptr> errors(n_threads);
    std::vector<double> times;

    auto worker = [&](int w) {
        try {
            for (int i = w; i < n_traj; i += n_threads) {
                const Trajectory t =
                    evolve_stochastic(G_det, eigen, gamma_m, s0, t_end, dt,
                                      base_seed + static_cast<std::uint64_t>(i),
                                      sample_every);
                std::vector<double>& slot = samples[i];
                slot.reserve(t.times.size());
                for (std::size_t j = 0; j < t.times.size(); ++j)
                    slot.push_back(f(t.times[j], t.states[j]));
                if (i == 0) times = t.times;
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int w = 0; w < n_threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    const std::size_t n_t = times.size();
    EnsembleSeries out;
    out.times = times;
    out.n_trajectories = n_traj;
    out.mean.assign(n_t, 0.0);
    out.std_error.assign(n_t, 0.0);

    // Welford accumulation in trajectory order.
    std::vector<double> m2(n_t, 0.0);
    for (int i = 0; i < n_traj; ++i) {
        const std::vector<double>& slot = samples[i];
        for (std::size_t j = 0; j < n_t; ++j) {
            const double delta = slot[j] - out.mean[j];
            out.mean[j] += delta / (i + 1);
            m2[j] += delta * (slot[j] - out.mean[j]);
        }
    }
    if (n_traj > 1) {
        for (std::size_t j = 0; j < n_t; ++j)
            out.std_error[j] =
                std::sqrt(m2[j] / (static_cast<double>(n_traj) - 1.0) /
                          static_cast<double>(n_traj));
    }
    return out;
}

} // namespace qtm
