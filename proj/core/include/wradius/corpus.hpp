#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wradius/analysis.hpp"
#include "wradius/generate.hpp"

namespace wradius {

inline constexpr std::uint64_t kDefaultMasterSeed = 0x77726164697573ULL;

struct CorpusConfig {
    std::size_t count = 500;
    std::size_t min_dim = 2;
    std::size_t max_dim = 8;
    std::uint64_t master_seed = kDefaultMasterSeed;
    std::vector<MatrixKind> kinds{ensemble_kinds().begin(), ensemble_kinds().end()};
    AnalysisConfig analysis;
    /// Worker threads; unset reads WRADIUS_THREADS. 0 and 1 both run serially.
    std::optional<unsigned> threads;

    /// Throws DomainError on an empty kind list, paper_example in the list,
    /// or min_dim outside [1, max_dim].
    void validate() const;
};

/// Matrix `index` of the corpus: kinds cycle fastest, then dimensions, and the
/// seed is substream_seed(master_seed, index).
GeneratorSpec corpus_spec(const CorpusConfig& config, std::size_t index);

/// WRADIUS_THREADS if set (0 = serial), else the hardware concurrency.
/// Throws DomainError on a value that is not a non-negative integer.
unsigned threads_from_env();

struct InvariantStats {
    std::string id;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    /// Smallest slack / (1 + max(|lhs|, |rhs|)) over evaluated verdicts.
    double worst_slack = 0.0;
    std::string worst_label;
};

struct CorpusFailure {
    MatrixDigest digest;
    ComplexMatrix matrix = ComplexMatrix::zeros(1);
    std::vector<std::string> failed_ids;
};

struct CorpusSummary {
    std::size_t matrices = 0;
    /// Sorted by id.
    std::vector<InvariantStats> invariants;
    /// In corpus order.
    std::vector<CorpusFailure> failures;
    double wall_ms = 0.0;

    std::size_t violations() const;
    bool ok() const { return violations() == 0; }
};

/// Analyses every corpus matrix, fanning out over worker threads. The
/// summary does not depend on the thread count (apart from wall_ms).
CorpusSummary verify_corpus(const CorpusConfig& config);

}  // namespace wradius
