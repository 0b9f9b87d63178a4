#include "qtm/baths.hpp"

#include <cmath>
#include <stdexcept>

namespace qtm {

void BathSpec::validate() const {
    if (temperature <= 0.0)
        throw std::invalid_argument("BathSpec: temperature must be > 0");
    if (strength < 0.0)
        throw std::invalid_argument("BathSpec: strength must be >= 0");
    if (coupling_kind == CouplingKind::ohmic && cutoff <= 0.0)
        throw std::invalid_argument("BathSpec: ohmic density needs cutoff > 0");
    if (nonlinearity == Nonlinearity::quadratic &&
        statistics != Statistics::bosonic)
        throw std::invalid_argument(
            "BathSpec: quadratic contact requires bosonic statistics");
}

double occupation(Statistics stat, double eps, double T) {
    if (T <= 0.0)
        throw std::invalid_argument("occupation: temperature must be > 0");
    const double x = eps / T;
    if (stat == Statistics::fermionic) {
        if (x > 700.0) return 0.0;
        if (x < -700.0) return 1.0;
        return 1.0 / (std::exp(x) + 1.0);
    }
    if (eps <= 0.0)
        throw std::domain_error(
            "occupation: Bose-Einstein distribution undefined for eps <= 0");
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

double spectral_density(const BathSpec& bath, double omega) {
    if (bath.coupling_kind == CouplingKind::flat) return bath.strength;
    return bath.strength * omega * std::exp(-omega / bath.cutoff);
}

namespace {

// |Gamma(omega)| with the exponential kept at the signed argument, the
// continuation of the ohmic density used on the absorption side of a level
// crossing.
double density_magnitude(const BathSpec& bath, double omega) {
    if (bath.coupling_kind == CouplingKind::flat) return bath.strength;
    return bath.strength * std::abs(omega) * std::exp(-omega / bath.cutoff);
}

// Bosonic absorption/emission kernels Gamma(eps) n(eps) and
// Gamma(eps)(1 + n(eps)), written as eps/expm1(eps/T) products so both stay
// finite, nonnegative and analytic through eps = 0 (value strength * T for
// the ohmic density) and keep up/down = exp(-eps/T) exactly for either sign.
void ohmic_kernels(const BathSpec& bath, double eps, double& absorb,
                   double& emit) {
    const double T = bath.temperature;
    if (eps == 0.0) {
        absorb = emit = bath.strength * T;
        return;
    }
    const double x = eps / T;
    const double cut = std::exp(-eps / bath.cutoff);
    if (x > 700.0) {
        absorb = 0.0;
        emit = bath.strength * eps * cut;
        return;
    }
    if (x < -700.0) {
        absorb = bath.strength * (-eps) * cut;
        emit = 0.0;
        return;
    }
    absorb = bath.strength * cut * eps / std::expm1(x);
    emit = absorb * std::exp(x);
}

ChannelRates linear_channel(const BathSpec& bath, double eps, double lam) {
    ChannelRates r;
    if (bath.statistics == Statistics::fermionic) {
        const double d = spectral_density(bath, eps);
        const double f = occupation(Statistics::fermionic, eps, bath.temperature);
        r.tilde_up = d * f;
        r.tilde_down = d * (1.0 - f);
    } else if (bath.coupling_kind == CouplingKind::flat) {
        // occupation() throws the domain error for eps <= 0 here
        const double n = occupation(Statistics::bosonic, eps, bath.temperature);
        r.tilde_up = bath.strength * n;
        r.tilde_down = bath.strength * (1.0 + n);
    } else {
        ohmic_kernels(bath, eps, r.tilde_up, r.tilde_down);
    }
    r.up = lam * r.tilde_up;
    r.down = lam * r.tilde_down;
    return r;
}

ChannelRates quadratic_channel(const BathSpec& bath, double eps, double lam) {
    if (eps == 0.0)
        throw std::domain_error(
            "rates_nonlinear: two-quantum rates singular at eps = 0");
    const double x = 0.5 * eps;
    const double a = std::abs(x);
    const double n = occupation(Statistics::bosonic, a, bath.temperature);
    const double g0 = density_magnitude(bath, x);
    ChannelRates r;
    if (x > 0.0) {
        r.tilde_down = g0 * (1.0 + n) * (1.0 + n);
        r.tilde_up = g0 * n * n;
    } else {
        r.tilde_down = g0 * n * n;
        r.tilde_up = g0 * (1.0 + n) * (1.0 + n);
    }
    r.up = lam * r.tilde_up;
    r.down = lam * r.tilde_down;
    return r;
}

} // namespace

RateSet rates_linear(const BathSpec& bath, const EigenBasis& eigen) {
    bath.validate();
    if (bath.nonlinearity != Nonlinearity::linear)
        throw std::invalid_argument("rates_linear: bath is not linear");
    RateSet rs;
    rs.plus = linear_channel(bath, eigen.eps_plus,
                             lambda_weight(bath.side, 1, eigen));
    rs.minus = linear_channel(bath, eigen.eps_minus,
                              lambda_weight(bath.side, 0, eigen));
    return rs;
}

RateSet rates_nonlinear(const BathSpec& bath, const EigenBasis& eigen) {
    bath.validate();
    if (bath.statistics != Statistics::bosonic || bath.side != Side::R)
        throw std::invalid_argument(
            "rates_nonlinear: quadratic contact is defined for the bosonic "
            "bath on side R");
    RateSet rs;
    rs.plus = quadratic_channel(bath, eigen.eps_plus,
                                lambda_weight(bath.side, 1, eigen));
    rs.minus = quadratic_channel(bath, eigen.eps_minus,
                                 lambda_weight(bath.side, 0, eigen));
    return rs;
}

RateSet bath_rates(const BathSpec& bath, const EigenBasis& eigen) {
    return bath.nonlinearity == Nonlinearity::quadratic
               ? rates_nonlinear(bath, eigen)
               : rates_linear(bath, eigen);
}

} // namespace qtm
