#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "wradius/matrix.hpp"

namespace wradius {

enum class MatrixKind {
    ginibre,
    hermitian,
    normal,
    nilpotent_shift,
    rank_one_nilpotent,
    jordan_block,
    paper_example,
};

std::string_view to_string(MatrixKind k);
/// Throws ParseError on an unknown name.
MatrixKind parse_matrix_kind(std::string_view s);

/// The six random and structured ensembles (everything except paper_example).
std::span<const MatrixKind> ensemble_kinds();

struct GeneratorSpec {
    MatrixKind kind = MatrixKind::ginibre;
    std::size_t n = 2;
    std::uint64_t seed = 0;
    double scale = 1.0;
    /// Fixture id, used only when kind == paper_example (n is then ignored).
    std::string example_id;

    /// Throws DomainError (n < 1, n < 2 for rank_one_nilpotent, non-finite
    /// scale) or ParseError (unknown example id).
    void validate() const;
};

/// Deterministic in the spec. All ensembles are multiplied by `scale`:
///   ginibre             iid standard complex Gaussian entries
///   hermitian           (G + G*) / 2
///   normal              U diag(d) U*, U from modified Gram-Schmidt QR of G, d complex Gaussian
///   nilpotent_shift     ones on the superdiagonal
///   rank_one_nilpotent  E_12 padded with zeros
///   jordan_block        lambda I + shift, lambda complex Gaussian
ComplexMatrix generate(const GeneratorSpec& spec);

/// ex_i, ex_ii, shift3, th13_b, diag_1_i, e12.
std::span<const std::string_view> paper_example_ids();
/// Throws ParseError on an unknown id.
ComplexMatrix paper_example(std::string_view id);

}  // namespace wradius
