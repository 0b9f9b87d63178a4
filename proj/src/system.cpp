#include "qtm/system.hpp"

#include <numbers>
#include <stdexcept>

namespace qtm {

EigenBasis diagonalize(const SystemParams& p) {
    if (p.coupling < 0.0)
        throw std::invalid_argument("diagonalize: coupling must be >= 0");
    const double delta = p.e_L - p.e_R;
    if (p.coupling == 0.0 && delta == 0.0)
        throw std::invalid_argument(
            "diagonalize: degenerate point e_L == e_R with zero coupling, "
            "eigenbasis undefined");

    EigenBasis e;
    e.delta = delta;
    e.h = std::sqrt(4.0 * p.coupling * p.coupling + delta * delta);
    e.sin_t = std::sqrt((e.h - delta) / (2.0 * e.h));
    e.cos_t = std::sqrt((e.h + delta) / (2.0 * e.h));
    const double mean = 0.5 * (p.e_L + p.e_R);
    e.eps_plus = mean + 0.5 * e.h;
    e.eps_minus = mean - 0.5 * e.h;
    return e;
}

double lambda_weight(Side side, int m_plus, const EigenBasis& e) {
    const double c2 = e.cos_t * e.cos_t;
    const double s2 = e.sin_t * e.sin_t;
    if (side == Side::L)
        return m_plus ? c2 : s2;
    return m_plus ? s2 : c2;
}

double DriveProtocol::period() const {
    if (omega <= 0.0)
        throw std::invalid_argument("DriveProtocol::period: omega must be > 0");
    return 2.0 * std::numbers::pi / omega;
}

DriveSample drive_at(const DriveProtocol& d, double tau) {
    DriveSample s;
    const double aL = d.omega * tau + d.e_L.phase;
    const double aR = d.omega * tau + d.e_R.phase;
    s.params.e_L = d.e_L.offset + d.e_L.amplitude * std::cos(aL);
    s.params.e_R = d.e_R.offset + d.e_R.amplitude * std::cos(aR);
    s.params.coupling = d.coupling;
    s.de_L = -d.e_L.amplitude * d.omega * std::sin(aL);
    s.de_R = -d.e_R.amplitude * d.omega * std::sin(aR);
    return s;
}

LevelVelocity level_velocity(const EigenBasis& e, const DriveSample& s) {
    const double sum = 0.5 * (s.de_L + s.de_R);
    const double diff = 0.5 * (e.delta / e.h) * (s.de_L - s.de_R);
    return {sum + diff, sum - diff};
}

} // namespace qtm
