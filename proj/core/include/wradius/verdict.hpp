#pragma once

#include <string>
#include <string_view>

namespace wradius {

/// Relative and absolute slack applied to every inequality verdict.
inline constexpr double kRelSlack = 1e-7;
inline constexpr double kAbsSlack = 1e-9;

enum class VerdictStatus { pass, fail, skipped };

std::string_view to_string(VerdictStatus s);

/// Outcome of one machine-checked claim `lhs <= rhs` (or `lhs == rhs`).
/// slack = rhs - lhs for inequalities and -|lhs - rhs| for equalities, so a
/// negative slack always marks the tight or violated side. Boolean checks
/// carry slack 0.
struct Verdict {
    std::string id;
    VerdictStatus status = VerdictStatus::skipped;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::string note;

    bool passed() const { return status == VerdictStatus::pass; }
    bool failed() const { return status == VerdictStatus::fail; }
};

/// Passes iff lhs <= rhs * (1 + rel) + abs. NaN operands fail.
Verdict check_le(std::string id, double lhs, double rhs, double rel = kRelSlack, double abs = kAbsSlack);

/// Passes iff |lhs - rhs| <= tol * (1 + max(|lhs|, |rhs|)).
Verdict check_close(std::string id, double lhs, double rhs, double tol);

/// Passes iff cond; lhs/rhs are carried along as evidence and slack is 0.
Verdict check_true(std::string id, bool cond, double lhs = 0.0, double rhs = 0.0, std::string note = {});

Verdict skipped(std::string id, std::string note);

}  // namespace wradius
