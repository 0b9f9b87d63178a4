#pragma once

#include <stdexcept>
#include <string>

namespace qtm {

// Bad or inconsistent run configuration (unknown keys, invalid ranges, ...).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver failed to meet its accuracy contract (singular steady state,
// finite-difference divergence, guard-band breach, ...).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qtm
