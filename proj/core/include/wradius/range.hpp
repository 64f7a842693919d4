#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wradius/matrix.hpp"

namespace wradius {

/// Controls the support-function sweep theta -> lambda_max(Re(e^{i theta} A)).
struct SweepPolicy {
    /// Coarse angles on [0, 2 pi).
    int grid_n = 1024;
    /// Golden-section iterations spent on each extremum.
    int refine_iters = 80;
    /// Target relative accuracy of the refined extrema.
    double tol = 1e-10;

    /// Throws DomainError unless grid_n >= 16, refine_iters >= 1, tol > 0.
    void validate() const;
};

struct SweepProfile {
    std::vector<double> angles;
    /// h(theta) = lambda_max(Re(e^{i theta} A)) at each angle.
    std::vector<double> values;
    double max_value = 0.0;
    double argmax_angle = 0.0;
    double min_value = 0.0;
    double argmin_angle = 0.0;
};

/// Ordered points <A x, x> on the boundary of an inner approximation of W(A),
/// counter-clockwise.
struct RangePolygon {
    std::vector<Complex> points;
};

/// Re(e^{i theta} A) = (e^{i theta} A + e^{-i theta} A*) / 2.
HermitianMatrix rotated_real_part(const ComplexMatrix& a, double theta);

/// lambda_max(Re(e^{i theta} A)).
double support_value(const ComplexMatrix& a, double theta);

/// h at the policy's uniform grid angles, without refinement.
std::vector<double> support_samples(const ComplexMatrix& a, const SweepPolicy& policy);

/// Samples h on the uniform grid and refines both the global max and the
/// global min by golden-section search on the two grid cells around the best
/// (worst) sample.
SweepProfile sweep(const ComplexMatrix& a, const SweepPolicy& policy = {});

/// w(A) = max_theta lambda_max(Re(e^{i theta} A)); equals sweep(a).max_value
/// but skips the minimum refinement.
double numerical_radius(const ComplexMatrix& a, const SweepPolicy& policy = {});

/// c(A) = dist(0, W(A)) = max(0, -min_theta h(theta)).
double crawford_number(const ComplexMatrix& a, const SweepPolicy& policy = {});

/// For m uniform angles theta, emits <A x, x> for a top eigenvector x of
/// Re(e^{-i theta} A). Requires m >= 8.
RangePolygon range_boundary(const ComplexMatrix& a, int m);

struct Extremum {
    double angle;
    double value;
};

/// Refines the maximum of a 2 pi periodic function sampled at the uniform
/// grid angles 2 pi k / values.size(), by golden-section search on the two
/// cells adjacent to the best sample and to any other local maximum within
/// the support-function slack max * (1 - cos(pi / n)) of it (at most four
/// candidates). The result is never below the best sample.
Extremum refine_periodic_max(const std::function<double(double)>& f, std::span<const double> values,
                             const SweepPolicy& policy);

/// Uniform grid 2 pi k / n, k = 0..n-1.
std::vector<double> uniform_angles(int n);

}  // namespace wradius
