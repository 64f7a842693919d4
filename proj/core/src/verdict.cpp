#include "wradius/verdict.hpp"

#include <algorithm>
#include <cmath>

namespace wradius {

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::pass:
            return "pass";
        case VerdictStatus::fail:
            return "fail";
        case VerdictStatus::skipped:
            return "skipped";
    }
    return "unknown";
}

Verdict check_le(std::string id, double lhs, double rhs, double rel, double abs) {
    const bool ok = lhs <= rhs * (1.0 + rel) + abs;
    return {std::move(id), ok ? VerdictStatus::pass : VerdictStatus::fail, lhs, rhs, rhs - lhs, {}};
}

Verdict check_close(std::string id, double lhs, double rhs, double tol) {
    const double gap = std::abs(lhs - rhs);
    const bool ok = gap <= tol * (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
    return {std::move(id), ok ? VerdictStatus::pass : VerdictStatus::fail, lhs, rhs, -gap, {}};
}

Verdict check_true(std::string id, bool cond, double lhs, double rhs, std::string note) {
    return {std::move(id), cond ? VerdictStatus::pass : VerdictStatus::fail, lhs, rhs, 0.0, std::move(note)};
}

Verdict skipped(std::string id, std::string note) {
    return {std::move(id), VerdictStatus::skipped, 0.0, 0.0, 0.0, std::move(note)};
}

}  // namespace wradius
