// wradius: numerical radius bounds, equality cases and range plots from the
// command line. Exit status: 0 all verdicts pass, 1 a verdict failed, 2 usage
// or input error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wradius/analysis.hpp"
#include "wradius/corpus.hpp"
#include "wradius/error.hpp"
#include "wradius/export.hpp"
#include "wradius/generate.hpp"
#include "wradius/matrix_io.hpp"
#include "wradius/report.hpp"
#include "wradius/search.hpp"

namespace {

using namespace wradius;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Global {
    std::optional<double> tol;
    std::optional<int> grid;
    std::vector<double> r_list;
    std::string format = "json";
    bool quiet = false;
};

// Matrix source shared by analyze and range.
struct Source {
    std::string file;
    std::string example;
    std::string kind;
    std::size_t dim = 2;
    std::string seed = "0";
    double scale = 1.0;
};

std::uint64_t parse_seed(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') {
        throw ParseError("seed must be a non-negative integer, got '" + s + "'");
    }
    return v;
}

SweepPolicy policy_of(const Global& g) {
    SweepPolicy p;
    if (g.tol) {
        p.tol = *g.tol;
    }
    if (g.grid) {
        p.grid_n = *g.grid;
    }
    p.validate();
    return p;
}

AnalysisConfig analysis_of(const Global& g) {
    AnalysisConfig c;
    c.policy = policy_of(g);
    if (!g.r_list.empty()) {
        c.r_list = g.r_list;
    }
    c.validate();
    return c;
}

std::pair<ComplexMatrix, MatrixDigest> load(const Source& s) {
    const int given = !s.file.empty() + !s.example.empty() + !s.kind.empty();
    if (given != 1) {
        throw ParseError("give exactly one of FILE, --example or --kind");
    }
    MatrixDigest d;
    if (!s.file.empty()) {
        d.path = s.file;
        return {read_matrix_file(s.file), d};
    }
    GeneratorSpec spec;
    if (!s.example.empty()) {
        spec.kind = MatrixKind::paper_example;
        spec.example_id = s.example;
    } else {
        spec.kind = parse_matrix_kind(s.kind);
        spec.n = s.dim;
        spec.seed = parse_seed(s.seed);
        spec.scale = s.scale;
    }
    d.spec = spec;
    return {generate(spec), d};
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out, std::ios::binary);
    f << text;
    if (!f) {
        throw Error("cannot write " + out);
    }
}

void add_source_options(CLI::App* cmd, Source& s) {
    cmd->add_option("file", s.file, "Matrix file ({\"n\":..,\"entries\":[[[re,im],..],..]})");
    cmd->add_option("--example", s.example, "Built-in fixture: ex_i, ex_ii, shift3, th13_b, diag_1_i, e12");
    cmd->add_option("--kind", s.kind, "Generate: ginibre, hermitian, normal, nilpotent_shift, rank_one_nilpotent, jordan_block");
    cmd->add_option("--dim", s.dim, "Dimension for --kind")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", s.seed, "Seed for --kind (decimal or 0x hex)");
    cmd->add_option("--scale", s.scale, "Scale factor for --kind");
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const auto n = std::stoul(s);
            return {n, n};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("--dims expects N or A..B, got '" + s + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical radius bounds and equality-case analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--tol", g.tol, "Relative accuracy of the numerical radius sweep")->check(CLI::PositiveNumber);
    app.add_option("--grid", g.grid, "Coarse angles in the support-function sweep")->check(CLI::Range(16, 1 << 22));
    app.add_option("--r", g.r_list, "Power-mean exponents, comma separated")->delimiter(',');
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--quiet", g.quiet, "No summary line on stderr");

    // analyze
    Source an_src;
    std::string an_out;
    bool an_no_timings = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Bounds, equality cases and verdicts for one matrix");
    add_source_options(analyze_cmd, an_src);
    analyze_cmd->add_option("--out", an_out, "Report path (default stdout)");
    analyze_cmd->add_flag("--no-timings", an_no_timings, "Omit wall-clock fields");

    // verify
    std::size_t v_count = 500;
    std::string v_dims = "2..8";
    std::string v_seed = fmt::format("{:#x}", kDefaultMasterSeed);
    std::vector<std::string> v_kinds;
    std::string v_failures_dir;
    std::string v_out;
    bool v_no_timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Check every invariant over a random corpus");
    verify_cmd->add_option("--count", v_count, "Corpus size");
    verify_cmd->add_option("--dims", v_dims, "Dimension range A..B");
    verify_cmd->add_option("--seed", v_seed, "Master seed");
    verify_cmd->add_option("--kinds", v_kinds, "Ensembles, comma separated")->delimiter(',');
    verify_cmd->add_option("--failures-dir", v_failures_dir, "Write failing matrices here for replay");
    verify_cmd->add_option("--out", v_out, "Summary path (default stdout)");
    verify_cmd->add_flag("--no-timings", v_no_timings, "Omit wall-clock fields");

    // range
    Source rg_src;
    int rg_points = 360;
    std::string rg_format = "csv";
    std::string rg_out;
    auto* range_cmd = app.add_subcommand("range", "Export the boundary of the numerical range");
    add_source_options(range_cmd, rg_src);
    range_cmd->add_option("--points", rg_points, "Boundary points (>= 8)");
    range_cmd->add_option("--format", rg_format, "csv or svg");
    range_cmd->add_option("--out", rg_out, "Output path, - for stdout")->required();

    // search
    SearchConfig sc;
    std::string s_seed = "1";
    std::string s_out;
    std::string s_matrix_out;
    auto* search_cmd = app.add_subcommand("search", "Hill-climb for matrices where a bound is sharp");
    search_cmd->add_option("--bound", sc.bound_id, "Bound id")->required();
    search_cmd->add_option("--iters", sc.iters, "Ratio evaluations");
    search_cmd->add_option("--seed", s_seed, "Seed");
    search_cmd->add_option("--dim", sc.n, "Dimension")->check(CLI::PositiveNumber);
    search_cmd->add_option("--restarts", sc.restarts, "Random starting points");
    search_cmd->add_option("--out", s_out, "Result path (default stdout)");
    search_cmd->add_option("--save-matrix", s_matrix_out, "Write the best matrix as a matrix file");

    // gen
    Source gen_src;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated matrix file");
    gen_cmd->add_option("--kind", gen_src.kind, "Ensemble or paper_example");
    gen_cmd->add_option("--example", gen_src.example, "Built-in fixture id");
    gen_cmd->add_option("--dim", gen_src.dim, "Dimension")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_src.seed, "Seed (decimal or 0x hex)");
    gen_cmd->add_option("--scale", gen_src.scale, "Scale factor");
    gen_cmd->add_option("--out", gen_out, "Output path, - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            const AnalysisConfig config = analysis_of(g);
            auto [a, digest] = load(an_src);
            const ChainReport r = analyze(a, config, std::move(digest));
            const ReportOptions opts{!an_no_timings};
            emit(g.format == "csv" ? report_to_csv(r, opts) : report_to_json(r, opts), an_out);
            if (!g.quiet) {
                fmt::print(stderr, "analyze: {}: {} verdicts, {} failed\n", r.digest.label(), r.verdicts.size(),
                           r.failures());
            }
            return r.all_pass() ? kExitPass : kExitFail;
        }
        if (*verify_cmd) {
            CorpusConfig config;
            config.analysis = analysis_of(g);
            config.count = v_count;
            std::tie(config.min_dim, config.max_dim) = parse_dims(v_dims);
            config.master_seed = parse_seed(v_seed);
            if (!v_kinds.empty()) {
                config.kinds.clear();
                for (const auto& k : v_kinds) {
                    config.kinds.push_back(parse_matrix_kind(k));
                }
            }
            const CorpusSummary s = verify_corpus(config);
            const ReportOptions opts{!v_no_timings};
            emit(g.format == "csv" ? summary_to_csv(s) : summary_to_json(s, opts), v_out);
            if (!v_failures_dir.empty() && !s.failures.empty()) {
                std::filesystem::create_directories(v_failures_dir);
                for (const auto& f : s.failures) {
                    const auto name = fmt::format("failure_{}.json", f.digest.corpus_index.value_or(0));
                    write_matrix_file(std::filesystem::path(v_failures_dir) / name, f.matrix);
                }
            }
            if (!g.quiet) {
                fmt::print(stderr, "verify: {} matrices, {} invariants, {} violations in {} matrices ({:.1f} s)\n",
                           s.matrices, s.invariants.size(), s.violations(), s.failures.size(), s.wall_ms / 1000.0);
            }
            return s.ok() ? kExitPass : kExitFail;
        }
        if (*range_cmd) {
            const SweepPolicy policy = policy_of(g);
            const auto [a, digest] = load(rg_src);
            emit(export_range(a, rg_points, parse_export_format(rg_format), policy), rg_out);
            return kExitPass;
        }
        if (*search_cmd) {
            sc.policy = policy_of(g);
            sc.seed = parse_seed(s_seed);
            const SearchResult r = sharpness_search(sc);
            emit(g.format == "csv" ? search_to_csv(r) : search_to_json(r), s_out);
            if (!s_matrix_out.empty()) {
                write_matrix_file(s_matrix_out, r.best);
            }
            // A ratio above one would contradict the bound.
            const bool holds = r.ratio <= 1.0 + 1e-7;
            if (!g.quiet) {
                fmt::print(stderr, "search: {} ratio {:.12g} after {} evaluations\n", r.bound_id, r.ratio,
                           r.evaluations);
            }
            return holds ? kExitPass : kExitFail;
        }
        if (*gen_cmd) {
            if (gen_src.kind == "paper_example") {
                gen_src.kind.clear();
            }
            const auto [a, digest] = load(gen_src);
            emit(write_matrix(a), gen_out);
            return kExitPass;
        }
    } catch (const ConvergenceError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitFail;
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
