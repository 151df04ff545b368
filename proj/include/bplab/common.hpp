#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bplab {

// Exit codes used by the CLI: 0 success, 2 parameter error, 3 budget
// exceeded, 4 internal assertion.
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct ContractError : std::logic_error {
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ParamError(msg);
}

inline void contract(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

// Default tolerances, centralized so tests and solvers agree.
namespace tols {
inline constexpr double feasibility = 1e-9;
inline constexpr double pivot = 1e-10;
inline constexpr double reduced_cost = 1e-7;
inline constexpr double bp_prune = 1e-7;
inline constexpr double zero_entry = 1e-7;  // membership threshold for zero sets
}  // namespace tols

// All slack/bucket formulas take their logarithm from one place. The base is
// configurable (CLI flag --log-base); natural log is the default everywhere.
struct LogCfg {
    double base = 0.0;  // 0 means natural log

    double log(double x) const {
        double l = std::log(x);
        return base == 0.0 ? l : l / std::log(base);
    }
};

inline double sq(double x) { return x * x; }

}  // namespace bplab
