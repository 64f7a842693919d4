#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wradius/matrix.hpp"
#include "wradius/rng.hpp"

namespace testing {

using wradius::Complex;
using wradius::ComplexMatrix;

inline ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
    wradius::SplitMix64 rng(seed);
    std::vector<Complex> e(n * n);
    for (auto& z : e) {
        z = rng.complex_gaussian();
    }
    return ComplexMatrix(n, std::move(e));
}

inline std::vector<Complex> random_vector(std::size_t n, wradius::SplitMix64& rng) {
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = rng.complex_gaussian();
    }
    return v;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return d;
}

// |z|-relative closeness used throughout: |a - b| <= tol (1 + max(|a|, |b|)).
inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace testing
