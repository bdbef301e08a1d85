// Search budgets. All combinatorial enumerations charge elementary steps
// against a budget so a bad input degrades into resource_limit_error instead
// of a hang. LENSCAPE_MAX_SEARCH=N raises the budget to N and lifts the
// documented desk-scale size gates (the budget then does the guarding).
#pragma once

#include <cstdint>

namespace lenscape {

struct SearchLimits {
    std::uint64_t step_budget = 50'000'000; // elementary enumeration steps
    bool gates_enabled = true;              // a-priori size gates on inputs
};

// reads LENSCAPE_MAX_SEARCH once per process
const SearchLimits& search_limits();

// step counter helper: charge() throws resource_limit_error past the budget
class StepBudget {
public:
    explicit StepBudget(const char* what) : what_(what) {}
    void charge(std::uint64_t n = 1);
    std::uint64_t used() const { return used_; }

private:
    const char* what_;
    std::uint64_t used_ = 0;
};

} // namespace lenscape
