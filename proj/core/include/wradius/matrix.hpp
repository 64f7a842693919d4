#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wradius {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major as (re, im) pairs.
///
/// Instances are immutable in spirit: every operation returns a new value.
/// Construction from user data rejects non-finite entries and n == 0.
class ComplexMatrix {
public:
    /// n x n matrix from row-major entries; throws DomainError on n == 0,
    /// DimensionError if entries.size() != n*n, DomainError on NaN/Inf.
    ComplexMatrix(std::size_t n, std::vector<Complex> entries);

    /// Nested-list literal, e.g. {{1, 0}, {0, Complex(0, 1)}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix zeros(std::size_t n);
    static ComplexMatrix identity(std::size_t n);
    /// Matrix unit E_{ij} (one at (i, j), zero elsewhere).
    static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t dim() const noexcept { return n_; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
    std::span<const Complex> entries() const noexcept { return data_; }

    /// Largest entry modulus.
    double max_abs() const noexcept;
    double frobenius_norm() const noexcept;
    bool is_hermitian(double tol) const noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    struct Unchecked {};
    ComplexMatrix(Unchecked, std::size_t n, std::vector<Complex> entries) noexcept
        : n_(n), data_(std::move(entries)) {}

    std::size_t n_;
    std::vector<Complex> data_;

    friend class HermitianMatrix;
    friend ComplexMatrix adjoint(const ComplexMatrix&);
    friend ComplexMatrix multiply(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator+(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator-(const ComplexMatrix&, const ComplexMatrix&);
    friend ComplexMatrix operator*(Complex, const ComplexMatrix&);
    friend ComplexMatrix shift_diagonal(const ComplexMatrix&, Complex);
};

/// Hermitian matrix. Construction tolerates a max-entry deviation from H = H*
/// of 1e-12 * (1 + max|h_ij|) and then symmetrizes exactly, so the stored
/// entries satisfy h_ji == conj(h_ij) bit-wise and the diagonal is real.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& m);

    /// (M + M*) / 2 for any square M; no tolerance check.
    static HermitianMatrix real_part_of(const ComplexMatrix& m);

    std::size_t dim() const noexcept { return m_.dim(); }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    operator const ComplexMatrix&() const noexcept { return m_; }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    struct Trusted {};
    HermitianMatrix(Trusted, ComplexMatrix m) noexcept : m_(std::move(m)) {}
    static ComplexMatrix symmetrized(const ComplexMatrix& m);

    ComplexMatrix m_;

    friend HermitianMatrix operator+(const HermitianMatrix&, const HermitianMatrix&);
    friend HermitianMatrix operator-(const HermitianMatrix&, const HermitianMatrix&);
    friend HermitianMatrix operator*(double, const HermitianMatrix&);
};

ComplexMatrix adjoint(const ComplexMatrix& m);

/// Standard product; throws DimensionError on mismatched sizes.
ComplexMatrix multiply(const ComplexMatrix& m, const ComplexMatrix& n);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return multiply(a, b); }

/// A + s*I.
ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex s);

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);

/// A* A, Hermitian by construction.
HermitianMatrix gram(const ComplexMatrix& a);
/// A A*.
HermitianMatrix cogram(const ComplexMatrix& a);
/// H^2 for Hermitian H.
HermitianMatrix square(const HermitianMatrix& h);

struct CartesianParts {
    HermitianMatrix re;
    HermitianMatrix im;
};

/// Re(A) = (A + A*)/2 and Im(A) = (A - A*)/(2i).
CartesianParts cartesian_parts(const ComplexMatrix& a);

/// <A x, x> for a vector x of matching length.
Complex quadratic_form(const ComplexMatrix& a, std::span<const Complex> x);

double vector_norm(std::span<const Complex> x);
/// <x, y> = sum x_k conj(y_k) (linear in the first slot).
Complex inner(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace wradius
