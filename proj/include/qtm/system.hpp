#pragma once

#include <cmath>

namespace qtm {

// Which representation of the reduced density matrix is evolved:
// populations only (3 components) or populations plus the +/- coherence
// (5 real components).
enum class Mode { diagonal, coherent };

inline constexpr int state_dim(Mode m) { return m == Mode::diagonal ? 3 : 5; }

// Bare two-site Hamiltonian parameters: on-site energies and the
// inter-site tunneling/exchange coupling.
struct SystemParams {
    double e_L = 0.0;
    double e_R = 0.0;
    double coupling = 0.0; // g >= 0
};

// Single-excitation eigenbasis of the two-site Hamiltonian. The shared
// ground level sits at energy 0, so eps_plus and eps_minus are also the
// transition gaps to it.
struct EigenBasis {
    double delta;     // e_L - e_R
    double h;         // sqrt(4 g^2 + delta^2), the +/- splitting
    double sin_t;     // sin(theta), theta in [0, pi/2]
    double cos_t;
    double eps_plus;
    double eps_minus;

    double sin2t() const { return 2.0 * sin_t * cos_t; }
    double cos2t() const { return cos_t * cos_t - sin_t * sin_t; }
    double splitting() const { return eps_plus - eps_minus; } // == h
};

// Mixing-angle branch is fixed by the square-root closed forms, which stay
// single-valued when delta < 0 (theta then lands in (pi/4, pi/2]).
// Throws std::invalid_argument at the fully degenerate point
// coupling == 0, delta == 0 where the basis is undefined.
EigenBasis diagonalize(const SystemParams& p);

// Site <-> eigenmode weights: |<m|site>|^2.
// L couples to + with cos^2(theta), to - with sin^2(theta); R the reverse.
enum class Side { L, R };
double lambda_weight(Side side, int m_plus, const EigenBasis& e);

// Sinusoidal drive of one bare parameter: p(tau) = offset + amplitude *
// cos(omega tau + phase).
struct HarmonicDrive {
    double offset = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
};

// Periodic protocol driving (e_L, e_R) at a common angular frequency;
// the coupling stays constant. amplitude == 0 on both reproduces a static
// system.
struct DriveProtocol {
    HarmonicDrive e_L;
    HarmonicDrive e_R;
    double coupling = 0.0;
    double omega = 0.0;

    bool is_static() const {
        return e_L.amplitude == 0.0 && e_R.amplitude == 0.0;
    }
    double period() const;
};

struct DriveSample {
    SystemParams params;
    double de_L; // d e_L / d tau
    double de_R;
};

DriveSample drive_at(const DriveProtocol& d, double tau);

// Rate of change of the eigenlevel energies under the drive, obtained by
// chaining d eps_{+-} = (de_L + de_R)/2 +- (delta/h)(de_L - de_R)/2.
struct LevelVelocity {
    double dplus = 0.0;
    double dminus = 0.0;
};

LevelVelocity level_velocity(const EigenBasis& e, const DriveSample& s);

} // namespace qtm
