#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "wradius/matrix.hpp"
#include "wradius/range.hpp"

namespace wradius {

/// Lower bounds (ratio bound / w^2): kittaneh_lower, th1_l1, th1_l2, cor1,
/// beta_max, remark_refined, theor16, thn16, theor17.
/// Upper bounds (ratio w^2 / bound): kittaneh_upper, dragomir, th13, th14, thp1.
std::span<const std::string_view> searchable_bounds();
bool is_lower_bound(std::string_view bound_id);

/// The sharpness ratio of one bound at A; at most 1 (plus roundoff) whenever
/// the bound holds. 0 for the zero matrix. Throws ParseError on an unknown id.
double bound_ratio(std::string_view bound_id, const ComplexMatrix& a, const SweepPolicy& policy = {});

struct SearchConfig {
    std::string bound_id = "kittaneh_lower";
    std::size_t n = 2;
    /// Ratio evaluations after the seed matrix.
    std::size_t iters = 5000;
    std::uint64_t seed = 1;
    std::size_t restarts = 2;
    SweepPolicy policy;
};

struct SearchResult {
    std::string bound_id;
    /// Frobenius norm 1.
    ComplexMatrix best = ComplexMatrix::zeros(1);
    double ratio = 0.0;
    std::size_t evaluations = 0;
};

/// Maximises bound_ratio over matrices of Frobenius norm 1: the budget is
/// split over `restarts` Ginibre starting points, each improved by a Gaussian
/// entry-perturbation hill-climb whose step grows on success and shrinks on
/// failure (success target 1/21). The first start is the seed matrix; with
/// iters == 0 its ratio is returned. Deterministic in the config.
SearchResult sharpness_search(const SearchConfig& config);

}  // namespace wradius
