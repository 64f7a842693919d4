#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wradius/bounds.hpp"
#include "wradius/equality.hpp"
#include "wradius/generate.hpp"
#include "wradius/matrix.hpp"
#include "wradius/range.hpp"
#include "wradius/verdict.hpp"

namespace wradius {

struct AnalysisConfig {
    SweepPolicy policy;
    std::vector<double> r_list = kDefaultRList;
    /// Seeds the random vectors of the auxiliary inequality rows.
    std::uint64_t lemma_seed = 0x6c656d6d61ULL;

    /// Throws DomainError for an invalid policy or r list.
    void validate() const;
};

/// Where a matrix came from, enough to regenerate it.
struct MatrixDigest {
    std::size_t n = 0;
    /// Set for generated matrices (including built-in fixtures).
    std::optional<GeneratorSpec> spec;
    /// Set for matrices read from a file.
    std::string path;
    /// Position in a verification corpus.
    std::optional<std::size_t> corpus_index;

    /// e.g. "ginibre n=4 seed=0x1f", "example ex_i", "file m.json".
    std::string label() const;
};

struct ChainReport {
    MatrixDigest digest;
    ComplexMatrix matrix = ComplexMatrix::zeros(1);
    BoundReport bounds;
    EqualityReport half_norm;
    EqualityReport half_root_k;
    BjOrthogonality bj;
    /// Auxiliary inequalities for the pairs (A, A*) and (A*A, AA*).
    std::vector<LemmaRow> lemmas;
    /// Bound verdicts followed by the equality and consistency verdicts.
    std::vector<Verdict> verdicts;
    double wall_ms = 0.0;

    bool all_pass() const;
    std::size_t failures() const;
};

/// Runs full_report and the equality analysis and collects every verdict.
/// Errors inside one section are recorded as failed verdicts; only an
/// invalid config throws.
ChainReport analyze(const ComplexMatrix& a, const AnalysisConfig& config = {}, MatrixDigest digest = {});

}  // namespace wradius
