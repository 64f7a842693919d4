#include "wradius/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wradius/error.hpp"

namespace wradius {

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (n_ == 0) {
        throw DomainError("matrix dimension must be at least 1");
    }
    if (data_.size() != n_ * n_) {
        throw DimensionError("expected " + std::to_string(n_ * n_) + " entries, got " + std::to_string(data_.size()));
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (!std::isfinite(data_[k].real()) || !std::isfinite(data_[k].imag())) {
            throw DomainError("non-finite entry at (" + std::to_string(k / n_) + ", " + std::to_string(k % n_) + ")");
        }
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
    if (n_ == 0) {
        throw DomainError("matrix dimension must be at least 1");
    }
    data_.reserve(n_ * n_);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw DimensionError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n_));
        }
        for (const auto& z : row) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw DomainError("non-finite entry in row " + std::to_string(r));
            }
            data_.push_back(z);
        }
        ++r;
    }
}

ComplexMatrix ComplexMatrix::zeros(std::size_t n) {
    if (n == 0) {
        throw DomainError("matrix dimension must be at least 1");
    }
    return ComplexMatrix(Unchecked{}, n, std::vector<Complex>(n * n));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    auto m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i * n + i] = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw DimensionError("matrix unit index out of range");
    }
    auto m = zeros(n);
    m.data_[i * n + j] = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    std::vector<Complex> e(diag.size() * diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        e[i * diag.size() + i] = diag[i];
    }
    return ComplexMatrix(diag.size(), std::move(e));
}

double ComplexMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

ComplexMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i * n + i] = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex h = 0.5 * (m(i, j) + std::conj(m(j, i)));
            e[i * n + j] = h;
            e[j * n + i] = std::conj(h);
        }
    }
    return ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e));
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(symmetrized(m)) {
    const double tol = 1e-12 * (1.0 + m.max_abs());
    if (!m.is_hermitian(tol)) {
        throw DomainError("matrix is not Hermitian within 1e-12 relative deviation");
    }
}

HermitianMatrix HermitianMatrix::real_part_of(const ComplexMatrix& m) {
    return HermitianMatrix(Trusted{}, symmetrized(m));
}

// ---------------------------------------------------------------------------

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            e[j * n + i] = std::conj(m(i, j));
        }
    }
    return ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e));
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("cannot multiply " + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " by " +
                             std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
    }
    const std::size_t n = a.dim();
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                e[i * n + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(ComplexMatrix::Unchecked{}, n, std::move(e));
}

namespace {

template <typename Op>
ComplexMatrix entrywise(const ComplexMatrix& a, const ComplexMatrix& b, Op op) {
    if (a.dim() != b.dim()) {
        throw DimensionError("entrywise operation on matrices of different dimension");
    }
    std::vector<Complex> e(a.entries().size());
    for (std::size_t k = 0; k < e.size(); ++k) {
        e[k] = op(a.entries()[k], b.entries()[k]);
    }
    return ComplexMatrix(a.dim(), std::move(e));
}

}  // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    return entrywise(a, b, std::plus<>{});
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return entrywise(a, b, std::minus<>{});
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto& z : e) {
        z *= s;
    }
    return ComplexMatrix(ComplexMatrix::Unchecked{}, a.dim(), std::move(e));
}

ComplexMatrix shift_diagonal(const ComplexMatrix& a, Complex s) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        e[i * a.dim() + i] += s;
    }
    return ComplexMatrix(ComplexMatrix::Unchecked{}, a.dim(), std::move(e));
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, a.matrix() + b.matrix());
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, a.matrix() - b.matrix());
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(HermitianMatrix::Trusted{}, Complex(s) * a.matrix());
}

HermitianMatrix gram(const ComplexMatrix& a) {
    return HermitianMatrix::real_part_of(multiply(adjoint(a), a));
}

HermitianMatrix cogram(const ComplexMatrix& a) {
    return HermitianMatrix::real_part_of(multiply(a, adjoint(a)));
}

HermitianMatrix square(const HermitianMatrix& h) {
    return HermitianMatrix::real_part_of(multiply(h, h));
}

CartesianParts cartesian_parts(const ComplexMatrix& a) {
    return {HermitianMatrix::real_part_of(a), HermitianMatrix::real_part_of(Complex(0.0, -1.0) * a)};
}

Complex quadratic_form(const ComplexMatrix& a, std::span<const Complex> x) {
    if (x.size() != a.dim()) {
        throw DimensionError("vector length does not match matrix dimension");
    }
    const std::size_t n = a.dim();
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += a(i, j) * x[j];
        }
        acc += row * std::conj(x[i]);
    }
    return acc;
}

double vector_norm(std::span<const Complex> x) {
    double s = 0.0;
    for (const auto& z : x) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.size() != y.size()) {
        throw DimensionError("inner product of vectors of different length");
    }
    Complex acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        acc += x[k] * std::conj(y[k]);
    }
    return acc;
}

}  // namespace wradius
