#include "lenscape/config.hpp"

#include <cstdlib>
#include <string>

#include "lenscape/errors.hpp"

namespace lenscape {

static SearchLimits read_limits() {
    SearchLimits lim;
    if (const char* env = std::getenv("LENSCAPE_MAX_SEARCH")) {
        try {
            lim.step_budget = std::stoull(env);
            lim.gates_enabled = false;
        } catch (const std::exception&) {
            throw invalid_input_error("LENSCAPE_MAX_SEARCH must be a positive integer");
        }
        if (lim.step_budget == 0)
            throw invalid_input_error("LENSCAPE_MAX_SEARCH must be a positive integer");
    }
    return lim;
}

const SearchLimits& search_limits() {
    static const SearchLimits lim = read_limits();
    return lim;
}

void StepBudget::charge(std::uint64_t n) {
    used_ += n;
    if (used_ > search_limits().step_budget)
        throw resource_limit_error(std::string(what_) + ": search budget exceeded (set LENSCAPE_MAX_SEARCH to raise)");
}

} // namespace lenscape
