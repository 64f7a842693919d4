#include "wradius/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wradius/error.hpp"

namespace wradius {

namespace {

// Working storage for one Jacobi run: a full n x n copy plus optional vectors.
struct JacobiState {
    std::size_t n;
    std::vector<Complex> a;
    std::vector<Complex> v;  // empty unless vectors requested

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }

    double off_mass() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                s += std::norm(a[i * n + j]);
            }
        }
        return std::sqrt(2.0 * s);
    }

    // A <- G* A G with G = [[c, s e], [-s conj(e), c]] on coordinates (p, q),
    // chosen so that the (p, q) entry vanishes.
    void rotate(std::size_t p, std::size_t q, bool force_zero) {
        const Complex apq = at(p, q);
        const double mag = std::sqrt(std::norm(apq));
        if (mag == 0.0) {
            return;
        }
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        if (force_zero) {
            at(p, q) = 0.0;
            at(q, p) = 0.0;
            return;
        }
        const Complex e = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) {
            t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex se = s * e;
        const Complex sec = std::conj(se);

        // Column update of A G; the row update of G* (A G) is its conjugate
        // transpose, so only the off-(p, q) entries are computed once.
        for (std::size_t k = 0; k < n; ++k) {
            if (k == p || k == q) {
                continue;
            }
            const Complex akp = a[k * n + p];
            const Complex akq = a[k * n + q];
            const Complex nkp = c * akp - sec * akq;
            const Complex nkq = se * akp + c * akq;
            a[k * n + p] = nkp;
            a[k * n + q] = nkq;
            a[p * n + k] = std::conj(nkp);
            a[q * n + k] = std::conj(nkq);
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        at(p, p) = app - t * mag;
        at(q, q) = aqq + t * mag;

        if (!v.empty()) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex vkp = v[k * n + p];
                const Complex vkq = v[k * n + q];
                v[k * n + p] = c * vkp - sec * vkq;
                v[k * n + q] = se * vkp + c * vkq;
            }
        }
    }
};

}  // namespace

Spectrum hermitian_eigen(const HermitianMatrix& h, double tol, EigenVectors want) {
    if (!(tol > 0.0)) {
        throw DomainError("eigensolver tolerance must be positive");
    }
    const std::size_t n = h.dim();
    JacobiState st{n, std::vector<Complex>(h.matrix().entries().begin(), h.matrix().entries().end()), {}};
    if (want == EigenVectors::yes) {
        st.v.assign(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            st.v[i * n + i] = 1.0;
        }
    }

    const double threshold = tol * (1.0 + h.matrix().frobenius_norm());
    int sweep = 0;
    while (st.off_mass() > threshold) {
        if (++sweep > kMaxJacobiSweeps) {
            throw ConvergenceError("Jacobi eigensolver did not converge within " + std::to_string(kMaxJacobiSweeps) +
                                   " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                // Late sweeps: an entry below the diagonal's ulp can no longer
                // move the eigenvalues and is dropped.
                const double g = 100.0 * std::sqrt(std::norm(st.at(p, q)));
                const double app = std::abs(st.at(p, p).real());
                const double aqq = std::abs(st.at(q, q).real());
                const bool negligible = sweep > 4 && app + g == app && aqq + g == aqq;
                st.rotate(p, q, negligible);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return st.at(i, i).real() < st.at(j, j).real(); });

    Spectrum out;
    out.values.reserve(n);
    for (std::size_t k : order) {
        out.values.push_back(st.at(k, k).real());
    }
    if (want == EigenVectors::yes) {
        std::vector<Complex> vs(n * n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                vs[row * n + col] = st.v[row * n + order[col]];
            }
        }
        out.vectors = ComplexMatrix(n, std::move(vs));
    }
    return out;
}

double lambda_max(const HermitianMatrix& h) {
    if (h.dim() == 1) {
        return h(0, 0).real();
    }
    return hermitian_eigen(h).max();
}

double operator_norm(const ComplexMatrix& a) {
    if (a.dim() == 1) {
        return std::abs(a(0, 0));
    }
    return std::sqrt(std::max(0.0, lambda_max(gram(a))));
}

double operator_norm(const HermitianMatrix& h) {
    const auto s = hermitian_eigen(h);
    return std::max(std::abs(s.min()), std::abs(s.max()));
}

HermitianMatrix positive_sqrt(const HermitianMatrix& h) {
    const auto s = hermitian_eigen(h, kDefaultEigenTol, EigenVectors::yes);
    const double norm = std::max(std::abs(s.min()), std::abs(s.max()));
    const double reject_below = -std::max(1e-6 * norm, 1e-10 * (1.0 + norm));
    if (s.min() < reject_below) {
        throw DomainError("positive_sqrt: matrix has a materially negative eigenvalue " + std::to_string(s.min()));
    }
    const std::size_t n = h.dim();
    const ComplexMatrix& v = *s.vectors;
    std::vector<Complex> r(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(0.0, s.values[k]));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = root * v(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                r[i * n + j] += vik * std::conj(v(j, k));
            }
        }
    }
    return HermitianMatrix::real_part_of(ComplexMatrix(n, std::move(r)));
}

HermitianMatrix modulus(const ComplexMatrix& a) {
    return positive_sqrt(gram(a));
}

double crawford_hermitian(const HermitianMatrix& h) {
    const auto s = hermitian_eigen(h);
    if (s.min() <= 0.0 && s.max() >= 0.0) {
        return 0.0;
    }
    return std::min(std::abs(s.min()), std::abs(s.max()));
}

bool is_positive_semidefinite(const HermitianMatrix& h, double tol) {
    const auto s = hermitian_eigen(h);
    const double norm = std::max(std::abs(s.min()), std::abs(s.max()));
    return s.min() >= -tol * (1.0 + norm);
}

}  // namespace wradius
