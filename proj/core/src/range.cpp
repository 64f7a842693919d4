#include "wradius/range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wradius/error.hpp"
#include "wradius/golden.hpp"
#include "wradius/spectral.hpp"

namespace wradius {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    return t < 0.0 ? t + kTwoPi : t;
}

// The bracket is narrowed until the value error, quadratic in the bracket
// width near a smooth extremum, is far below tol.
constexpr std::size_t kMaxRefineCandidates = 4;

double refine_width(const SweepPolicy& policy) {
    return 1e-3 * std::sqrt(policy.tol);
}

}  // namespace

void SweepPolicy::validate() const {
    if (grid_n < 16) {
        throw DomainError("sweep grid must have at least 16 angles");
    }
    if (refine_iters < 1) {
        throw DomainError("sweep refine_iters must be at least 1");
    }
    if (!(tol > 0.0)) {
        throw DomainError("sweep tolerance must be positive");
    }
}

std::vector<double> uniform_angles(int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] = kTwoPi * k / n;
    }
    return out;
}

HermitianMatrix rotated_real_part(const ComplexMatrix& a, double theta) {
    return HermitianMatrix::real_part_of(std::polar(1.0, theta) * a);
}

double support_value(const ComplexMatrix& a, double theta) {
    return lambda_max(rotated_real_part(a, theta));
}

Extremum refine_periodic_max(const std::function<double(double)>& f, std::span<const double> values,
                             const SweepPolicy& policy) {
    const std::size_t n = values.size();
    const double cell = kTwoPi / static_cast<double>(n);
    const auto best = std::max_element(values.begin(), values.end());

    // A sample next to the true maximiser of a support function is at least
    // max * cos(pi / n); every local maximum above that line is a candidate.
    const double floor = *best - std::abs(*best) * (1.0 - std::cos(std::numbers::pi / static_cast<double>(n)));
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < n; ++k) {
        const double prev = values[(k + n - 1) % n];
        const double next = values[(k + 1) % n];
        if (values[k] >= floor && values[k] >= prev && values[k] >= next) {
            candidates.push_back(k);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    if (candidates.size() > kMaxRefineCandidates) {
        candidates.resize(kMaxRefineCandidates);
    }

    Extremum out{cell * static_cast<double>(best - values.begin()), *best};
    for (std::size_t k : candidates) {
        const double centre = cell * static_cast<double>(k);
        const auto r =
            golden_section_maximize(f, centre - cell, centre + cell, policy.refine_iters, refine_width(policy));
        if (r.value > out.value) {
            out = {wrap_angle(r.x), r.value};
        }
    }
    return out;
}

std::vector<double> support_samples(const ComplexMatrix& a, const SweepPolicy& policy) {
    policy.validate();
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(policy.grid_n));
    for (double theta : uniform_angles(policy.grid_n)) {
        values.push_back(support_value(a, theta));
    }
    return values;
}

namespace {

SweepProfile coarse_profile(const ComplexMatrix& a, const SweepPolicy& policy) {
    SweepProfile p;
    p.values = support_samples(a, policy);
    p.angles = uniform_angles(policy.grid_n);
    return p;
}

}  // namespace

SweepProfile sweep(const ComplexMatrix& a, const SweepPolicy& policy) {
    SweepProfile p = coarse_profile(a, policy);
    const auto h = [&](double theta) { return support_value(a, theta); };
    const auto top = refine_periodic_max(h, p.values, policy);
    p.max_value = top.value;
    p.argmax_angle = top.angle;

    std::vector<double> negated(p.values.size());
    std::transform(p.values.begin(), p.values.end(), negated.begin(), [](double v) { return -v; });
    const auto bottom = refine_periodic_max([&](double theta) { return -h(theta); }, negated, policy);
    p.min_value = -bottom.value;
    p.argmin_angle = bottom.angle;
    return p;
}

double numerical_radius(const ComplexMatrix& a, const SweepPolicy& policy) {
    const SweepProfile p = coarse_profile(a, policy);
    return refine_periodic_max([&](double theta) { return support_value(a, theta); }, p.values, policy).value;
}

double crawford_number(const ComplexMatrix& a, const SweepPolicy& policy) {
    return std::max(0.0, -sweep(a, policy).min_value);
}

RangePolygon range_boundary(const ComplexMatrix& a, int m) {
    if (m < 8) {
        throw DomainError("range_boundary needs at least 8 angles");
    }
    RangePolygon poly;
    poly.points.reserve(static_cast<std::size_t>(m));
    const std::size_t n = a.dim();
    std::vector<Complex> x(n);
    for (double theta : uniform_angles(m)) {
        const auto s = hermitian_eigen(rotated_real_part(a, -theta), kDefaultEigenTol, EigenVectors::yes);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = (*s.vectors)(i, n - 1);
        }
        poly.points.push_back(quadratic_form(a, x));
    }
    return poly;
}

}  // namespace wradius
