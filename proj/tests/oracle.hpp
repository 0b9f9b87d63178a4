#pragma once

// Reference implementations used only by the tests. Everything here is
// computed along a different path than the library (complex 3x3 matrices,
// dense eigensolvers, closed-form occupations) so agreement is meaningful.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "qtm/baths.hpp"
#include "qtm/generators.hpp"
#include "qtm/system.hpp"

namespace oracle {

using Eigen::Matrix2d;
using Eigen::Matrix3cd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using cplx = std::complex<double>;

inline double fermi(double eps, double T) {
    // 0.5 (1 - tanh(eps / 2T)): same function, different evaluation path.
    return 0.5 * (1.0 - std::tanh(0.5 * eps / T));
}

inline double bose(double eps, double T) { return 1.0 / std::expm1(eps / T); }

// Levels and mixing angle from a dense 2x2 eigensolve of the one-excitation
// block [[e_L, g], [g, e_R]] in the site basis.
struct Basis {
    double eps_plus, eps_minus, sin_t, cos_t;
};

inline Basis solve_basis(double e_L, double e_R, double g) {
    Matrix2d H;
    H << e_L, g, g, e_R;
    Eigen::SelfAdjointEigenSolver<Matrix2d> es(H);
    Basis b;
    b.eps_minus = es.eigenvalues()(0);
    b.eps_plus = es.eigenvalues()(1);
    // |+> = cos |L> + sin |R> up to a global sign; both components share a
    // sign for g > 0, and theta in [0, pi/2] makes them nonnegative.
    b.cos_t = std::abs(es.eigenvectors()(0, 1));
    b.sin_t = std::abs(es.eigenvectors()(1, 1));
    return b;
}

// Complex density matrix in the (0, +, -) eigenbasis from the realified
// vector; the tracked coherence is <-|rho|+>.
inline Matrix3cd to_complex(const VectorXd& v) {
    Matrix3cd r = Matrix3cd::Zero();
    r(0, 0) = v[0];
    r(1, 1) = v[1];
    r(2, 2) = v[2];
    if (v.size() == 5) {
        r(2, 1) = cplx(v[3], v[4]);
        r(1, 2) = std::conj(r(2, 1));
    }
    return r;
}

inline VectorXd to_real(const Matrix3cd& r, int dim) {
    VectorXd v = VectorXd::Zero(dim);
    v[0] = r(0, 0).real();
    v[1] = r(1, 1).real();
    v[2] = r(2, 2).real();
    if (dim == 5) {
        v[3] = r(2, 1).real();
        v[4] = r(2, 1).imag();
    }
    return v;
}

// X = |R><R| with |R> = sin|+> + cos|-> in the (0, +, -) basis.
inline Matrix3cd detector(const qtm::EigenBasis& e) {
    Eigen::Vector3cd R;
    R << 0.0, e.sin_t, e.cos_t;
    return R * R.adjoint();
}

// Realify a linear complex-matrix map by applying it to basis states.
inline MatrixXd realify(const std::function<Matrix3cd(const Matrix3cd&)>& map,
                        int dim) {
    MatrixXd G(dim, dim);
    for (int j = 0; j < dim; ++j) {
        VectorXd ej = VectorXd::Zero(dim);
        ej[j] = 1.0;
        G.col(j) = to_real(map(to_complex(ej)), dim);
    }
    return G;
}

// Measurement dissipator Gamma_M (X rho X - {X, rho}/2).
inline MatrixXd measurement_superop(const qtm::EigenBasis& e, double gm,
                                    int dim) {
    const Matrix3cd X = detector(e);
    return realify(
        [&](const Matrix3cd& r) {
            return (gm * (X * r * X - 0.5 * (X * r + r * X))).eval();
        },
        dim);
}

// -i [H, rho] with H = diag(0, eps_+, eps_-).
inline MatrixXd unitary_superop(const qtm::EigenBasis& e, int dim) {
    Matrix3cd H = Matrix3cd::Zero();
    H(1, 1) = e.eps_plus;
    H(2, 2) = e.eps_minus;
    return realify(
        [&](const Matrix3cd& r) {
            return (cplx(0.0, -1.0) * (H * r - r * H)).eval();
        },
        dim);
}

// sqrt(2 Gamma_M) (X rho + rho X - 2 <X> rho) dW via complex matrices.
inline VectorXd stochastic_increment(const VectorXd& v,
                                     const qtm::EigenBasis& e, double gm,
                                     double dW) {
    const Matrix3cd X = detector(e);
    const Matrix3cd r = to_complex(v);
    const double mean = (X * r).trace().real();
    const Matrix3cd out =
        std::sqrt(2.0 * gm) * dW * (X * r + r * X - 2.0 * mean * r);
    return to_real(out, static_cast<int>(v.size()));
}

// Bath dissipator assembled from scratch: populations exchange with the
// ground level at the weighted rates; in the 5-component representation the
// populations couple to Re<-|rho|+> through the bare rates with weight
// sin(2 theta)/2 (ground row balancing the eigenmode rows), the coherence
// sources carry half that weight, and both coherence quadratures damp at the
// mean weighted down-rate. Side L takes the + orientation, side R the -.
inline MatrixXd bath_superop(const qtm::RateSet& rt, qtm::Side side,
                             const qtm::EigenBasis& e, int dim) {
    MatrixXd G = MatrixXd::Zero(dim, dim);
    G(0, 0) = -rt.plus.up - rt.minus.up;
    G(0, 1) = rt.plus.down;
    G(0, 2) = rt.minus.down;
    G(1, 0) = rt.plus.up;
    G(1, 1) = -rt.plus.down;
    G(2, 0) = rt.minus.up;
    G(2, 2) = -rt.minus.down;
    if (dim == 5) {
        const double w = (side == qtm::Side::L ? 1.0 : -1.0) * e.sin_t *
                         e.cos_t; // sin(2 theta)/2, signed
        G(1, 3) = -w * rt.minus.tilde_down;
        G(2, 3) = -w * rt.plus.tilde_down;
        G(0, 3) = w * (rt.minus.tilde_down + rt.plus.tilde_down);
        G(3, 0) = 0.5 * w * (rt.minus.tilde_up + rt.plus.tilde_up);
        G(3, 1) = -0.5 * w * rt.plus.tilde_down;
        G(3, 2) = -0.5 * w * rt.minus.tilde_down;
        G(3, 3) = -0.5 * (rt.plus.down + rt.minus.down);
        G(4, 4) = G(3, 3);
    }
    return G;
}

// Steady state through a different linear-algebra route: smallest singular
// vector of G, normalized to unit population trace.
inline VectorXd kernel_state(const MatrixXd& G) {
    Eigen::JacobiSVD<MatrixXd> svd(G, Eigen::ComputeFullV);
    VectorXd v = svd.matrixV().col(G.cols() - 1);
    return v / (v[0] + v[1] + v[2]);
}

// Exact propagator action exp(G t) s0 via a dense eigendecomposition.
inline VectorXd propagate(const MatrixXd& G, const VectorXd& s0, double t) {
    Eigen::EigenSolver<MatrixXd> es(G);
    const Eigen::VectorXcd lam = es.eigenvalues();
    const Eigen::MatrixXcd V = es.eigenvectors();
    Eigen::VectorXcd c = V.partialPivLu().solve(s0.cast<cplx>());
    for (int i = 0; i < c.size(); ++i) c[i] *= std::exp(lam[i] * t);
    return (V * c).real();
}

// Deterministic parameter soup for property tests.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double a, double b) {
        return a + (b - a) * std::uniform_real_distribution<double>(0, 1)(gen);
    }
    int pick(int n) { return static_cast<int>(gen() % n); }
};

} // namespace oracle
