#include "qtm/machine.hpp"

#include <stdexcept>

namespace qtm {

Machine::Built Machine::build(const SystemParams& p) const {
    if (bath_L.side != Side::L || bath_R.side != Side::R)
        throw std::invalid_argument("Machine: bath sides are swapped");
    Built b;
    b.eigen = diagonalize(p);
    b.rates_L = bath_rates(bath_L, b.eigen);
    b.rates_R = bath_rates(bath_R, b.eigen);
    b.gen_L = bath_generator(b.rates_L, Side::L, b.eigen, mode);
    b.gen_R = bath_generator(b.rates_R, Side::R, b.eigen, mode);
    b.gen_meas = measurement_generator(b.eigen, gamma_m, mode);
    b.gen_unitary = unitary_generator(b.eigen, mode);
    b.total = total_generator(b.gen_L, b.gen_R, b.gen_meas, b.gen_unitary);
    return b;
}

} // namespace qtm
