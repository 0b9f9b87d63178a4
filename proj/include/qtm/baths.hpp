#pragma once

#include "qtm/system.hpp"

namespace qtm {

enum class Statistics { fermionic, bosonic };
enum class CouplingKind { flat, ohmic };
enum class Nonlinearity { linear, quadratic };

// One reservoir: statistics, temperature, and its coupling density.
// strength is Gamma_alpha (energy units) for flat densities and the
// dimensionless Upsilon_alpha for ohmic ones; cutoff applies to ohmic only.
// The quadratic (two-quantum) contact is defined for bosonic baths on side R.
struct BathSpec {
    Side side = Side::L;
    Statistics statistics = Statistics::fermionic;
    double temperature = 1.0;
    CouplingKind coupling_kind = CouplingKind::flat;
    double strength = 0.0;
    double cutoff = 0.0;
    Nonlinearity nonlinearity = Nonlinearity::linear;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

// Mean occupation at energy eps: Fermi-Dirac or Bose-Einstein.
// Bosonic occupation at eps <= 0 is a hard domain error, not a clamp.
// |eps/T| > 700 uses the asymptotic limits to dodge overflow.
double occupation(Statistics stat, double eps, double T);

// Coupling density Gamma_alpha(omega): flat -> strength;
// ohmic -> strength * omega * exp(-omega / cutoff).
double spectral_density(const BathSpec& bath, double omega);

// Transition rates between the ground level and eigenmode m. tilde_* are
// the bare (weight-free) rates; up/down carry the lambda weight of the
// bath's side.
struct ChannelRates {
    double up = 0.0;        // gamma_{alpha,0m}: ground -> m, absorption
    double down = 0.0;      // gamma_{alpha,m0}: m -> ground, emission
    double tilde_up = 0.0;
    double tilde_down = 0.0;
};

struct RateSet {
    ChannelRates plus;
    ChannelRates minus;

    const ChannelRates& channel(int m_plus) const { return m_plus ? plus : minus; }
};

// Single-quantum rates: tilde_down = Gamma(eps)(1 -+ occupation), tilde_up =
// Gamma(eps) * occupation (upper sign fermionic, lower bosonic).
// Flat bosonic densities require eps_{m0} > 0 (domain error otherwise).
// Ohmic bosonic rates are evaluated through kernels that stay smooth and
// nonnegative through eps = 0 and satisfy up/down = exp(-eps/T) for every
// sign of eps, so slowly driven level crossings remain integrable.
RateSet rates_linear(const BathSpec& bath, const EigenBasis& eigen);

// Two-quantum rates for the quadratic contact:
//   down = lambda * Gamma(eps/2) * (1 + n(eps/2))^2,
//   up   = lambda * Gamma(eps/2) * n(eps/2)^2.
// For eps < 0 the mirrored branch (absorb two quanta of |eps|/2) is used;
// eps == 0 is singular for this contact and throws a domain error.
// Requires bosonic statistics and side R.
RateSet rates_nonlinear(const BathSpec& bath, const EigenBasis& eigen);

// Dispatch on bath.nonlinearity.
RateSet bath_rates(const BathSpec& bath, const EigenBasis& eigen);

} // namespace qtm
