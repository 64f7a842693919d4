#pragma once

#include <optional>
#include <vector>

#include "wradius/matrix.hpp"

namespace wradius {

/// Off-diagonal Frobenius mass, relative to (1 + ||H||_F), at which the
/// Jacobi iteration stops.
inline constexpr double kDefaultEigenTol = 1e-13;

/// Sweep cap; exceeding it raises ConvergenceError.
inline constexpr int kMaxJacobiSweeps = 100;

enum class EigenVectors { no, yes };

/// Eigen-decomposition of a Hermitian matrix.
struct Spectrum {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k]; present only when requested.
    std::optional<ComplexMatrix> vectors;

    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

/// Cyclic complex Jacobi rotations on H. Stops once the off-diagonal
/// Frobenius mass is at most tol * (1 + ||H||_F). Throws DomainError for
/// tol <= 0 and ConvergenceError after kMaxJacobiSweeps sweeps.
Spectrum hermitian_eigen(const HermitianMatrix& h, double tol = kDefaultEigenTol,
                         EigenVectors want = EigenVectors::no);

/// Largest eigenvalue of H.
double lambda_max(const HermitianMatrix& h);

/// Largest singular value, sqrt(lambda_max(A* A)).
double operator_norm(const ComplexMatrix& a);
/// max(|lambda_min|, |lambda_max|).
double operator_norm(const HermitianMatrix& h);

/// Unique PSD square root. Eigenvalues down to -1e-10 (1 + ||H||) are treated
/// as roundoff and clipped to zero; anything more negative than
/// max(1e-6 ||H||, 1e-10 (1 + ||H||)) throws DomainError.
HermitianMatrix positive_sqrt(const HermitianMatrix& h);

/// |A| = (A* A)^{1/2}.
HermitianMatrix modulus(const ComplexMatrix& a);

/// Crawford number of a Hermitian matrix: distance from 0 to [lambda_min, lambda_max].
double crawford_hermitian(const HermitianMatrix& h);

/// True when lambda_min(H) >= -tol * (1 + ||H||).
bool is_positive_semidefinite(const HermitianMatrix& h, double tol = 1e-10);

}  // namespace wradius
