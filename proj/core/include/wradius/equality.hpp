#pragma once

#include <span>
#include <utility>
#include <string_view>
#include <vector>

#include "wradius/matrix.hpp"
#include "wradius/range.hpp"

namespace wradius {

/// The two equality cases of the lower Kittaneh-type bounds.
enum class EqualityCase {
    half_norm,    // w(A) = ||A|| / 2
    half_root_k,  // w(A) = sqrt(||A*A + AA*||) / 2
};

std::string_view to_string(EqualityCase c);
/// Throws ParseError for anything but "half_norm" / "half_root_k".
EqualityCase parse_equality_case(std::string_view s);

/// Relative tolerance (on the 1 + w(A) scale) for declaring an equality case.
inline constexpr double kEqualityTol = 1e-8;
/// Relative tolerance (on the 1 + ||A|| scale) for a flat norm profile.
inline constexpr double kFlatnessTol = 1e-9;
/// Angles sampled by the flatness profile inside check_equality_case.
inline constexpr int kFlatnessSamples = 256;

struct Flatness {
    double mean = 0.0;
    double max_dev = 0.0;
};

/// Samples theta -> ||Re(e^{i theta} A)|| at m uniform angles and reports the
/// mean and the largest absolute deviation from it. Requires m >= 16.
Flatness flatness_profile(const ComplexMatrix& a, int m);

struct TranslationCheck {
    Complex lambda;
    double w_shifted = 0.0;   // w(A + lambda I)
    double w_plus_abs = 0.0;  // w(A) + |lambda|
    double residual = 0.0;    // |w_shifted - w_plus_abs|
};

/// Finite-dimensional consequences of w^2 = K/4:
///   c(s+) = c(s-) = 0  and  ||s+||^2 = ||s-||^2 = K/2.
struct Corp2Consequences {
    double crawford_plus = 0.0;
    double crawford_minus = 0.0;
    double norm_plus_sq = 0.0;
    double norm_minus_sq = 0.0;
    double half_k = 0.0;
    /// c(s+) = c(s-) = 0 within tolerance.
    bool crawfords_vanish = false;
    /// The three squared quantities coincide within tolerance.
    bool squares_coincide = false;
    /// c(s-) = 0, i.e. some unit x has <Re(A)x, x> = <Im(A)x, x>.
    bool balanced_vector_exists = false;
    bool all_match = false;
};

/// tol is relative to (1 + ||A||)^2 and applies to the squared quantities.
Corp2Consequences corp2_consequences(const ComplexMatrix& a, double tol = 1e-7);

struct EqualityReport {
    EqualityCase case_id = EqualityCase::half_norm;
    double w = 0.0;
    double target = 0.0;
    bool equality_holds = false;
    double residual = 0.0;  // |w - target|
    Flatness flatness;
    bool flat = false;
    /// An equality case forces W(A) to be an origin-centred disk, hence a flat
    /// norm profile; false flags an inconsistency.
    bool disk_consistent = true;
    std::vector<TranslationCheck> translation_checks;
    Corp2Consequences corp2;
};

/// Translation samples {1, -1, i, -i, 1+i, 0.5} scaled by (1 + ||A||).
std::vector<Complex> translation_samples(const ComplexMatrix& a);

/// 64 points: 16 angles on each circle of radius {1/4, 1/2, 1, 2} (1 + ||A||).
std::vector<Complex> default_bj_samples(const ComplexMatrix& a);

struct BjOrthogonality {
    double min_gap = 0.0;  // min over samples of w(A + lambda I) - w(A)
    bool orthogonal = false;
    /// max over samples of w(A + lambda I) - w(A) - |lambda|; the triangle
    /// inequality keeps it <= 0 up to roundoff.
    double max_excess = 0.0;
};

/// Numerical radius of the translates A + lambda I. Uses the identity
/// Re(e^{i t}(A + lambda I)) = Re(e^{i t} A) + Re(e^{i t} lambda) I to reuse
/// one coarse profile of A for every lambda; each translate still gets its own
/// golden-section refinement on exact eigenvalues.
class TranslateRadius {
public:
    TranslateRadius(const ComplexMatrix& a, const SweepPolicy& policy);

    double base() const { return w_; }
    double operator()(Complex lambda) const;

private:
    ComplexMatrix a_;
    SweepPolicy policy_;
    std::vector<double> samples_;
    double w_;
};

/// Shares w(A), the flatness profile, corp2 consequences and the translate
/// radius between both equality cases and the orthogonality test.
class EqualityAnalyzer {
public:
    EqualityAnalyzer(const ComplexMatrix& a, const SweepPolicy& policy);

    EqualityReport check(EqualityCase c) const;
    BjOrthogonality bj_orthogonality(std::span<const Complex> lambdas) const;
    double translate_radius(Complex lambda) const { return radius_(lambda); }

    double w() const { return radius_.base(); }
    double norm() const { return norm_; }
    double k_norm() const { return k_norm_; }
    const Flatness& flatness() const { return flatness_; }
    bool flat() const;

private:
    TranslateRadius radius_;
    double norm_;
    double k_norm_;
    Flatness flatness_;
    Corp2Consequences corp2_;
    std::vector<std::pair<Complex, double>> translates_;
};

EqualityReport check_equality_case(const ComplexMatrix& a, EqualityCase c, const SweepPolicy& policy = {});

/// Throws DomainError on an empty sample set.
BjOrthogonality bj_orthogonality(const ComplexMatrix& a, std::span<const Complex> lambdas,
                                 const SweepPolicy& policy = {});
BjOrthogonality bj_orthogonality(const ComplexMatrix& a, const SweepPolicy& policy = {});

}  // namespace wradius
