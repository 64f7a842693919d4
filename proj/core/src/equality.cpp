#include "wradius/equality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wradius/bounds.hpp"
#include "wradius/error.hpp"
#include "wradius/spectral.hpp"

namespace wradius {

std::string_view to_string(EqualityCase c) {
    return c == EqualityCase::half_norm ? "half_norm" : "half_root_k";
}

EqualityCase parse_equality_case(std::string_view s) {
    if (s == "half_norm") {
        return EqualityCase::half_norm;
    }
    if (s == "half_root_k") {
        return EqualityCase::half_root_k;
    }
    throw ParseError("unknown equality case '" + std::string(s) + "'");
}

Flatness flatness_profile(const ComplexMatrix& a, int m) {
    if (m < 16) {
        throw DomainError("flatness_profile needs at least 16 angles");
    }
    std::vector<double> norms;
    norms.reserve(static_cast<std::size_t>(m));
    for (double theta : uniform_angles(m)) {
        norms.push_back(operator_norm(rotated_real_part(a, theta)));
    }
    double mean = 0.0;
    for (double v : norms) {
        mean += v;
    }
    mean /= static_cast<double>(m);
    double dev = 0.0;
    for (double v : norms) {
        dev = std::max(dev, std::abs(v - mean));
    }
    return {mean, dev};
}

Corp2Consequences corp2_consequences(const ComplexMatrix& a, double tol) {
    const SumDiffParts p = sum_diff_parts(a);
    const double scale = tol * std::pow(1.0 + operator_norm(a), 2);
    Corp2Consequences c;
    c.crawford_plus = p.crawford_plus;
    c.crawford_minus = p.crawford_minus;
    c.norm_plus_sq = p.norm_plus * p.norm_plus;
    c.norm_minus_sq = p.norm_minus * p.norm_minus;
    c.half_k = 0.5 * p.k_norm;
    c.balanced_vector_exists = c.crawford_minus * c.crawford_minus <= scale;
    c.crawfords_vanish = c.crawford_plus * c.crawford_plus <= scale && c.balanced_vector_exists;
    c.squares_coincide = std::abs(c.norm_plus_sq - c.norm_minus_sq) <= scale &&
                         std::abs(c.norm_plus_sq - c.half_k) <= scale &&
                         std::abs(c.norm_minus_sq - c.half_k) <= scale;
    c.all_match = c.crawfords_vanish && c.squares_coincide;
    return c;
}

namespace {

std::vector<Complex> translation_samples_for_norm(double norm) {
    const double s = 1.0 + norm;
    return {s * Complex(1, 0), s * Complex(-1, 0), s * Complex(0, 1),
            s * Complex(0, -1), s * Complex(1, 1),  s * Complex(0.5, 0)};
}

std::vector<Complex> bj_samples_for_norm(double norm) {
    const double s = 1.0 + norm;
    std::vector<Complex> out;
    out.reserve(64);
    for (double radius : {0.25, 0.5, 1.0, 2.0}) {
        for (int k = 0; k < 16; ++k) {
            out.push_back(std::polar(radius * s, 2.0 * std::numbers::pi * k / 16.0));
        }
    }
    return out;
}

}  // namespace

std::vector<Complex> translation_samples(const ComplexMatrix& a) {
    return translation_samples_for_norm(operator_norm(a));
}

std::vector<Complex> default_bj_samples(const ComplexMatrix& a) {
    return bj_samples_for_norm(operator_norm(a));
}

// ---------------------------------------------------------------------------

TranslateRadius::TranslateRadius(const ComplexMatrix& a, const SweepPolicy& policy)
    : a_(a), policy_(policy), samples_(support_samples(a, policy)), w_(0.0) {
    w_ = (*this)(0.0);
}

double TranslateRadius::operator()(Complex lambda) const {
    const std::vector<double> angles = uniform_angles(policy_.grid_n);
    std::vector<double> shifted(samples_.size());
    for (std::size_t k = 0; k < shifted.size(); ++k) {
        shifted[k] = samples_[k] + (std::polar(1.0, angles[k]) * lambda).real();
    }
    const auto h = [&](double theta) { return support_value(a_, theta) + (std::polar(1.0, theta) * lambda).real(); };
    return refine_periodic_max(h, shifted, policy_).value;
}

EqualityAnalyzer::EqualityAnalyzer(const ComplexMatrix& a, const SweepPolicy& policy)
    : radius_(a, policy),
      norm_(operator_norm(a)),
      k_norm_(operator_norm(gram(a) + cogram(a))),
      flatness_(flatness_profile(a, kFlatnessSamples)),
      corp2_(corp2_consequences(a)) {
    for (Complex lambda : translation_samples_for_norm(norm_)) {
        translates_.push_back({lambda, radius_(lambda)});
    }
}

bool EqualityAnalyzer::flat() const {
    return flatness_.max_dev <= kFlatnessTol * (1.0 + norm_);
}

EqualityReport EqualityAnalyzer::check(EqualityCase c) const {
    EqualityReport r;
    r.case_id = c;
    r.w = w();
    r.target = c == EqualityCase::half_norm ? 0.5 * norm_ : 0.5 * std::sqrt(k_norm_);
    r.residual = std::abs(r.w - r.target);
    r.equality_holds = r.residual <= kEqualityTol * (1.0 + r.w);
    r.flatness = flatness_;
    r.flat = flat();
    r.disk_consistent = !r.equality_holds || r.flat;
    r.corp2 = corp2_;
    for (const auto& [lambda, w_shifted] : translates_) {
        TranslationCheck t;
        t.lambda = lambda;
        t.w_shifted = w_shifted;
        t.w_plus_abs = r.w + std::abs(lambda);
        t.residual = std::abs(t.w_shifted - t.w_plus_abs);
        r.translation_checks.push_back(t);
    }
    return r;
}

BjOrthogonality EqualityAnalyzer::bj_orthogonality(std::span<const Complex> lambdas) const {
    if (lambdas.empty()) {
        throw DomainError("bj_orthogonality needs at least one lambda sample");
    }
    BjOrthogonality out;
    out.min_gap = std::numeric_limits<double>::infinity();
    out.max_excess = -std::numeric_limits<double>::infinity();
    for (Complex lambda : lambdas) {
        const double gap = radius_(lambda) - w();
        out.min_gap = std::min(out.min_gap, gap);
        out.max_excess = std::max(out.max_excess, gap - std::abs(lambda));
    }
    out.orthogonal = out.min_gap >= -1e-8 * (1.0 + w());
    return out;
}

EqualityReport check_equality_case(const ComplexMatrix& a, EqualityCase c, const SweepPolicy& policy) {
    return EqualityAnalyzer(a, policy).check(c);
}

BjOrthogonality bj_orthogonality(const ComplexMatrix& a, std::span<const Complex> lambdas,
                                 const SweepPolicy& policy) {
    if (lambdas.empty()) {
        throw DomainError("bj_orthogonality needs at least one lambda sample");
    }
    return EqualityAnalyzer(a, policy).bj_orthogonality(lambdas);
}

BjOrthogonality bj_orthogonality(const ComplexMatrix& a, const SweepPolicy& policy) {
    const auto lambdas = default_bj_samples(a);
    return bj_orthogonality(a, lambdas, policy);
}

}  // namespace wradius
