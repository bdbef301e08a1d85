// Error taxonomy: the CLI maps these onto its exit codes (invalid input -> 2,
// resource limit -> 3); everything else is a hard bug and surfaces as exit 1.
#pragma once

#include <stdexcept>
#include <string>

namespace lenscape {

struct invalid_input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an internal cross-check failed (two routes to the same value disagreed);
// never expected on valid inputs, kept fatal on purpose
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace lenscape
