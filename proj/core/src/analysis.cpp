#include "wradius/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "wradius/error.hpp"
#include "wradius/rng.hpp"
#include "wradius/spectral.hpp"

namespace wradius {

namespace {

std::vector<Complex> gaussian_vector(SplitMix64& rng, std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) {
        z = rng.complex_gaussian();
    }
    return v;
}

void append_lemmas(ChainReport& r, const ComplexMatrix& a, const ComplexMatrix& d, std::string_view pair,
                   SplitMix64& rng, const SweepPolicy& policy) {
    const std::size_t n = a.dim();
    const auto x = gaussian_vector(rng, n);
    const auto y = gaussian_vector(rng, n);
    auto e = gaussian_vector(rng, n);
    const double ne = vector_norm(e);
    for (auto& z : e) {
        z /= ne;
    }
    for (LemmaRow row : lemma_suite(a, d, x, y, e, policy)) {
        const std::string id = fmt::format("lemma.{}[{}]", row.id, pair);
        if (!row.evaluated) {
            r.verdicts.push_back(skipped(id, row.note));
        } else {
            r.verdicts.push_back(check_le(id, row.lhs, row.rhs, 1e-8, 1e-8));
        }
        row.id = id;
        r.lemmas.push_back(std::move(row));
    }
}

void equality_verdicts(ChainReport& r, const EqualityAnalyzer& eq) {
    const double w = eq.w();
    double worst = 0.0;
    for (const auto& t : r.half_norm.translation_checks) {
        worst = std::max(worst, t.residual);
    }
    if (eq.flat()) {
        r.verdicts.push_back(check_le("equality.flat_implies_additive", worst, 1e-7, 0.0, 0.0));
    } else {
        r.verdicts.push_back(skipped("equality.flat_implies_additive", "norm profile not flat"));
    }

    // Triangle inequality over the translation and orthogonality samples.
    double excess = r.bj.max_excess;
    for (const auto& t : r.half_norm.translation_checks) {
        excess = std::max(excess, t.w_shifted - t.w_plus_abs);
    }
    r.verdicts.push_back(check_le("equality.triangle", w + excess, w, 0.0, 1e-8));

    for (const EqualityReport* rep : {&r.half_norm, &r.half_root_k}) {
        const std::string name(to_string(rep->case_id));
        r.verdicts.push_back(check_true("equality." + name + ".disk_consistent", rep->disk_consistent,
                                        rep->flatness.max_dev, kFlatnessTol * (1.0 + eq.norm())));
        if (rep->equality_holds) {
            r.verdicts.push_back(check_true("equality." + name + ".implies_bj", r.bj.orthogonal, r.bj.min_gap,
                                            -1e-8 * (1.0 + w)));
        } else {
            r.verdicts.push_back(skipped("equality." + name + ".implies_bj", "equality does not hold"));
        }
    }
    if (r.half_root_k.equality_holds) {
        r.verdicts.push_back(check_true("equality.half_root_k.implies_corp2", r.half_root_k.corp2.all_match));
    } else {
        r.verdicts.push_back(skipped("equality.half_root_k.implies_corp2", "equality does not hold"));
    }
}

}  // namespace

void AnalysisConfig::validate() const {
    policy.validate();
    if (r_list.empty()) {
        throw DomainError("r list must not be empty");
    }
    for (double r : r_list) {
        if (!(r >= 1.0) || !std::isfinite(r)) {
            throw DomainError(fmt::format("every r must be a finite value >= 1, got {}", r));
        }
    }
}

std::string MatrixDigest::label() const {
    std::string out;
    if (spec && spec->kind == MatrixKind::paper_example) {
        out = "example " + spec->example_id;
    } else if (spec) {
        out = fmt::format("{} n={} seed={:#x}", to_string(spec->kind), spec->n, spec->seed);
        if (spec->scale != 1.0) {
            out += fmt::format(" scale={}", spec->scale);
        }
    } else if (!path.empty()) {
        out = "file " + path;
    } else {
        out = fmt::format("matrix n={}", n);
    }
    if (corpus_index) {
        out = fmt::format("#{} {}", *corpus_index, out);
    }
    return out;
}

bool ChainReport::all_pass() const {
    return failures() == 0;
}

std::size_t ChainReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.failed(); }));
}

ChainReport analyze(const ComplexMatrix& a, const AnalysisConfig& config, MatrixDigest digest) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    ChainReport r;
    digest.n = a.dim();
    r.digest = std::move(digest);
    r.matrix = a;
    r.bounds = full_report(a, config.policy, config.r_list);
    r.verdicts = r.bounds.verdicts;

    try {
        const EqualityAnalyzer eq(a, config.policy);
        r.half_norm = eq.check(EqualityCase::half_norm);
        r.half_root_k = eq.check(EqualityCase::half_root_k);
        r.bj = eq.bj_orthogonality(default_bj_samples(a));
        equality_verdicts(r, eq);

        if (a.is_hermitian(1e-12)) {
            r.verdicts.push_back(check_close("hermitian.w_equals_norm", eq.w(), eq.norm(), 1e-9));
        } else {
            r.verdicts.push_back(skipped("hermitian.w_equals_norm", "matrix is not Hermitian"));
        }
    } catch (const Error& e) {
        r.verdicts.push_back(check_true("equality.errors.none", false, 0.0, 0.0, e.what()));
    }

    try {
        SplitMix64 rng(substream_seed(config.lemma_seed, a.dim()));
        append_lemmas(r, a, adjoint(a), "A,A*", rng, config.policy);
        append_lemmas(r, gram(a), cogram(a), "A*A,AA*", rng, config.policy);
    } catch (const Error& e) {
        r.verdicts.push_back(check_true("lemma.errors.none", false, 0.0, 0.0, e.what()));
    }

    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace wradius
