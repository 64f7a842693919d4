#include "wradius/generate.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "wradius/error.hpp"
#include "wradius/rng.hpp"

namespace wradius {

namespace {

constexpr std::array kKindNames{
    std::string_view{"ginibre"},         std::string_view{"hermitian"},
    std::string_view{"normal"},          std::string_view{"nilpotent_shift"},
    std::string_view{"rank_one_nilpotent"}, std::string_view{"jordan_block"},
    std::string_view{"paper_example"},
};

constexpr std::array kEnsembles{
    MatrixKind::ginibre,         MatrixKind::hermitian,          MatrixKind::normal,
    MatrixKind::nilpotent_shift, MatrixKind::rank_one_nilpotent, MatrixKind::jordan_block,
};

constexpr std::array kExampleIds{
    std::string_view{"ex_i"},   std::string_view{"ex_ii"},    std::string_view{"shift3"},
    std::string_view{"th13_b"}, std::string_view{"diag_1_i"}, std::string_view{"e12"},
};

ComplexMatrix ginibre(std::size_t n, SplitMix64& rng) {
    std::vector<Complex> e(n * n);
    for (auto& z : e) {
        z = rng.complex_gaussian();
    }
    return ComplexMatrix(n, std::move(e));
}

ComplexMatrix shift(std::size_t n) {
    std::vector<Complex> e(n * n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e[i * n + i + 1] = 1.0;
    }
    return ComplexMatrix(n, std::move(e));
}

// Columns of G orthonormalised left to right; a column that collapses is
// replaced by the next unit vector not yet spanned (never happens for
// Gaussian input in practice).
ComplexMatrix orthonormal_columns(const ComplexMatrix& g) {
    const std::size_t n = g.dim();
    std::vector<std::vector<Complex>> q;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Complex> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = g(i, j);
        }
        for (std::size_t attempt = 0;; ++attempt) {
            for (const auto& u : q) {
                const Complex proj = inner(v, u);
                for (std::size_t i = 0; i < n; ++i) {
                    v[i] -= proj * u[i];
                }
            }
            const double nv = vector_norm(v);
            if (nv > 1e-8) {
                for (auto& z : v) {
                    z /= nv;
                }
                break;
            }
            v.assign(n, 0.0);
            v[attempt % n] = 1.0;
        }
        q.push_back(std::move(v));
    }
    std::vector<Complex> u(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            u[i * n + j] = q[j][i];
        }
    }
    return ComplexMatrix(n, std::move(u));
}

}  // namespace

std::string_view to_string(MatrixKind k) {
    return kKindNames[static_cast<std::size_t>(k)];
}

MatrixKind parse_matrix_kind(std::string_view s) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == s) {
            return static_cast<MatrixKind>(i);
        }
    }
    throw ParseError("unknown matrix kind '" + std::string(s) + "'");
}

std::span<const MatrixKind> ensemble_kinds() {
    return kEnsembles;
}

std::span<const std::string_view> paper_example_ids() {
    return kExampleIds;
}

ComplexMatrix paper_example(std::string_view id) {
    using namespace std::complex_literals;
    if (id == "ex_i") {
        return ComplexMatrix{{2.0 + 2.0i, 0.0}, {0.0, 0.0}};
    }
    if (id == "ex_ii") {
        return ComplexMatrix{{3.0 + 2.0i, 0.0}, {0.0, 4.0i}};
    }
    if (id == "shift3") {
        return shift(3);
    }
    if (id == "th13_b") {
        return ComplexMatrix{{0.0, 2.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, std::numbers::sqrt2}};
    }
    if (id == "diag_1_i") {
        return ComplexMatrix{{1.0, 0.0}, {0.0, 1.0i}};
    }
    if (id == "e12") {
        return shift(2);
    }
    throw ParseError("unknown example '" + std::string(id) + "'");
}

void GeneratorSpec::validate() const {
    if (!std::isfinite(scale)) {
        throw DomainError("generator scale must be finite");
    }
    if (kind == MatrixKind::paper_example) {
        paper_example(example_id);
        return;
    }
    if (n < 1) {
        throw DomainError("generator dimension must be at least 1");
    }
    if (kind == MatrixKind::rank_one_nilpotent && n < 2) {
        throw DomainError("rank_one_nilpotent needs n >= 2");
    }
}

namespace {

ComplexMatrix unscaled(const GeneratorSpec& spec) {
    const std::size_t n = spec.n;
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
        case MatrixKind::ginibre:
            return ginibre(n, rng);
        case MatrixKind::hermitian:
            return HermitianMatrix::real_part_of(ginibre(n, rng)).matrix();
        case MatrixKind::normal: {
            const ComplexMatrix u = orthonormal_columns(ginibre(n, rng));
            std::vector<Complex> d(n);
            for (auto& z : d) {
                z = rng.complex_gaussian();
            }
            return u * ComplexMatrix::diagonal(d) * adjoint(u);
        }
        case MatrixKind::nilpotent_shift:
            return shift(n);
        case MatrixKind::rank_one_nilpotent:
            return ComplexMatrix::unit(n, 0, 1);
        case MatrixKind::jordan_block:
            return shift_diagonal(shift(n), rng.complex_gaussian());
        case MatrixKind::paper_example:
            break;
    }
    return paper_example(spec.example_id);
}

}  // namespace

ComplexMatrix generate(const GeneratorSpec& spec) {
    spec.validate();
    if (spec.kind == MatrixKind::paper_example) {
        return paper_example(spec.example_id);
    }
    ComplexMatrix m = unscaled(spec);
    return spec.scale == 1.0 ? m : Complex(spec.scale) * m;
}

}  // namespace wradius
