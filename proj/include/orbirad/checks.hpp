#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace orbirad {

// One evaluated inequality of a certificate or report.
struct Check {
    std::string name;
    double lhs = 0;
    std::string relation;
    double rhs = 0;
    bool pass = false;
};

inline Check check_lt(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, "<", rhs, lhs < rhs};
}
inline Check check_gt(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, ">", rhs, lhs > rhs};
}
inline Check check_ge(std::string name, double lhs, double rhs) {
    return {std::move(name), lhs, ">=", rhs, lhs >= rhs};
}
inline Check check_close(std::string name, double lhs, double rhs, double tol) {
    return {std::move(name), lhs, "== (tol " + std::to_string(tol) + ")", rhs,
            std::fabs(lhs - rhs) <= tol};
}

inline bool all_pass(const std::vector<Check>& checks) {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace orbirad
