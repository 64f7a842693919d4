#include "wradius/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "wradius/error.hpp"
#include "wradius/rng.hpp"

namespace wradius {

void CorpusConfig::validate() const {
    if (kinds.empty()) {
        throw DomainError("corpus needs at least one matrix kind");
    }
    if (std::find(kinds.begin(), kinds.end(), MatrixKind::paper_example) != kinds.end()) {
        throw DomainError("paper_example is not a corpus ensemble");
    }
    if (min_dim < 1 || min_dim > max_dim) {
        throw DomainError(fmt::format("bad corpus dimension range {}..{}", min_dim, max_dim));
    }
    const bool rank_one = std::find(kinds.begin(), kinds.end(), MatrixKind::rank_one_nilpotent) != kinds.end();
    if (rank_one && min_dim < 2) {
        throw DomainError("rank_one_nilpotent needs dimensions >= 2");
    }
    analysis.validate();
}

GeneratorSpec corpus_spec(const CorpusConfig& config, std::size_t index) {
    const std::size_t k = config.kinds.size();
    const std::size_t dims = config.max_dim - config.min_dim + 1;
    GeneratorSpec spec;
    spec.kind = config.kinds[index % k];
    spec.n = config.min_dim + (index / k) % dims;
    spec.seed = substream_seed(config.master_seed, index);
    return spec;
}

unsigned threads_from_env() {
    const char* env = std::getenv("WRADIUS_THREADS");
    if (env == nullptr || *env == '\0') {
        return std::max(1u, std::thread::hardware_concurrency());
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) {
        throw DomainError(fmt::format("WRADIUS_THREADS must be a non-negative integer, got '{}'", env));
    }
    return static_cast<unsigned>(v);
}

std::size_t CorpusSummary::violations() const {
    std::size_t total = 0;
    for (const auto& s : invariants) {
        total += s.failed;
    }
    return total;
}

namespace {

struct Outcome {
    MatrixDigest digest;
    ComplexMatrix matrix = ComplexMatrix::zeros(1);
    std::vector<Verdict> verdicts;
};

Outcome run_one(const CorpusConfig& config, std::size_t index) {
    MatrixDigest digest;
    digest.spec = corpus_spec(config, index);
    digest.corpus_index = index;
    const ComplexMatrix a = generate(*digest.spec);
    ChainReport r = analyze(a, config.analysis, std::move(digest));
    return {std::move(r.digest), std::move(r.matrix), std::move(r.verdicts)};
}

double relative_slack(const Verdict& v) {
    return v.slack / (1.0 + std::max(std::abs(v.lhs), std::abs(v.rhs)));
}

}  // namespace

CorpusSummary verify_corpus(const CorpusConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const std::size_t count = config.count;
    std::vector<std::optional<Outcome>> outcomes(count);
    std::vector<std::exception_ptr> errors(count);

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                outcomes[i] = run_one(config, i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(config.threads.value_or(threads_from_env()), count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    CorpusSummary summary;
    summary.matrices = count;
    std::map<std::string, InvariantStats> stats;
    for (auto& o : outcomes) {
        CorpusFailure failure{o->digest, o->matrix, {}};
        for (const Verdict& v : o->verdicts) {
            auto [it, fresh] = stats.try_emplace(v.id);
            InvariantStats& s = it->second;
            if (fresh) {
                s.id = v.id;
                s.worst_slack = INFINITY;
            }
            if (v.status == VerdictStatus::skipped) {
                ++s.skipped;
                continue;
            }
            v.passed() ? ++s.passed : ++s.failed;
            const double rel = relative_slack(v);
            if (rel < s.worst_slack || std::isnan(rel)) {
                s.worst_slack = rel;
                s.worst_label = o->digest.label();
            }
            if (v.failed()) {
                failure.failed_ids.push_back(v.id);
            }
        }
        if (!failure.failed_ids.empty()) {
            summary.failures.push_back(std::move(failure));
        }
    }
    for (auto& [id, s] : stats) {
        summary.invariants.push_back(std::move(s));
    }
    summary.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

}  // namespace wradius
