#pragma once

#include "qtm/generators.hpp"

namespace qtm {

// A configured machine: two reservoirs, a detector strength and the evolution
// mode. build() freezes the bare parameters into the eigenbasis, the rates
// and the four generator pieces, which is everything downstream observables
// need at one point of a drive protocol.
struct Machine {
    Mode mode = Mode::diagonal;
    BathSpec bath_L;
    BathSpec bath_R;
    double gamma_m = 0.0;

    struct Built {
        EigenBasis eigen;
        RateSet rates_L;
        RateSet rates_R;
        Superoperator gen_L;
        Superoperator gen_R;
        Superoperator gen_meas;
        Superoperator gen_unitary;
        Superoperator total;
    };

    Built build(const SystemParams& p) const;
};

} // namespace qtm
