#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "wradius/analysis.hpp"
#include "wradius/corpus.hpp"
#include "wradius/error.hpp"
#include "wradius/export.hpp"
#include "wradius/generate.hpp"
#include "wradius/matrix_io.hpp"
#include "wradius/report.hpp"
#include "wradius/rng.hpp"
#include "wradius/search.hpp"
#include "wradius/spectral.hpp"

using namespace wradius;
using namespace std::complex_literals;
using testing::close;

namespace {

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim() == b.dim() &&
           std::memcmp(a.entries().data(), b.entries().data(), a.entries().size() * sizeof(Complex)) == 0;
}

GeneratorSpec spec_of(MatrixKind kind, std::size_t n, std::uint64_t seed) {
    GeneratorSpec s;
    s.kind = kind;
    s.n = n;
    s.seed = seed;
    return s;
}

}  // namespace

TEST_CASE("SplitMix64 reference values") {
    // First outputs for seed 0 from the reference implementation.
    SplitMix64 r(0);
    CHECK(r.next() == 0xe220a8397b1dcdafULL);
    CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(r.next() == 0x06c45d188009454fULL);

    SplitMix64 u(123);
    double sum = 0.0;
    double sq = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double x = u.uniform();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        const double g = u.gaussian();
        sum += g;
        sq += g * g;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(std::abs(sq / n - 1.0) < 0.02);

    SplitMix64 c(9);
    double mod = 0.0;
    for (int k = 0; k < n; ++k) {
        mod += std::norm(c.complex_gaussian());
    }
    CHECK(std::abs(mod / n - 1.0) < 0.02);

    CHECK(substream_seed(1, 2) == mix64(1 ^ mix64(2)));
    CHECK(substream_seed(1, 2) != substream_seed(1, 3));
}

TEST_CASE("built-in fixtures") {
    CHECK(paper_example_ids().size() == 6);
    CHECK(paper_example("shift3") == ComplexMatrix{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}});
    CHECK(paper_example("ex_ii") == ComplexMatrix{{3.0 + 2.0i, 0.0}, {0.0, 4.0i}});
    CHECK(paper_example("ex_i") == ComplexMatrix{{2.0 + 2.0i, 0.0}, {0.0, 0.0}});
    CHECK(paper_example("e12") == ComplexMatrix::unit(2, 0, 1));
    CHECK(paper_example("th13_b")(2, 2) == Complex(std::numbers::sqrt2));
    CHECK_THROWS_AS(paper_example("ex_iii"), ParseError);

    GeneratorSpec s;
    s.kind = MatrixKind::paper_example;
    s.example_id = "diag_1_i";
    CHECK(generate(s) == ComplexMatrix{{1.0, 0.0}, {0.0, 1.0i}});
}

TEST_CASE("ensembles") {
    CHECK(generate(spec_of(MatrixKind::nilpotent_shift, 2, 0)) == ComplexMatrix::unit(2, 0, 1));
    CHECK(generate(spec_of(MatrixKind::rank_one_nilpotent, 4, 0)) == ComplexMatrix::unit(4, 0, 1));
    CHECK_THROWS_AS(generate(spec_of(MatrixKind::rank_one_nilpotent, 1, 0)), DomainError);
    CHECK_THROWS_AS(generate(spec_of(MatrixKind::ginibre, 0, 0)), DomainError);
    CHECK_THROWS_AS(parse_matrix_kind("wishart"), ParseError);
    for (auto k : ensemble_kinds()) {
        CHECK(parse_matrix_kind(to_string(k)) == k);
    }

    for (std::size_t n = 1; n <= 6; ++n) {
        const auto g1 = generate(spec_of(MatrixKind::ginibre, n, 5));
        CHECK(bitwise_equal(g1, generate(spec_of(MatrixKind::ginibre, n, 5))));
        CHECK_FALSE(g1 == generate(spec_of(MatrixKind::ginibre, n, 6)));

        CHECK(generate(spec_of(MatrixKind::hermitian, n, 5)).is_hermitian(0.0));

        const auto nm = generate(spec_of(MatrixKind::normal, n, 5));
        const auto comm = gram(nm).matrix() - cogram(nm).matrix();
        CHECK(comm.max_abs() <= 1e-12 * (1.0 + nm.max_abs() * nm.max_abs()));

        const auto j = generate(spec_of(MatrixKind::jordan_block, n, 5));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(j(i, i) == j(0, 0));
            if (i + 1 < n) {
                CHECK(j(i, i + 1) == 1.0);
            }
        }
    }

    auto scaled = spec_of(MatrixKind::nilpotent_shift, 3, 0);
    scaled.scale = 2.5;
    CHECK(generate(scaled)(0, 1) == 2.5);
}

TEST_CASE("matrix files") {
    CHECK(parse_matrix(R"({"n":1,"entries":[[[0.0,1.0]]]})") == ComplexMatrix{{1.0i}});
    CHECK(parse_matrix(R"({"n":1,"entries":[[[2,-3]]]})") == ComplexMatrix{{Complex(2.0, -3.0)}});

    // Bit-exact round trip, including signed zeros, subnormals and extremes.
    std::vector<Complex> odd{Complex(-0.0, 0.1), Complex(5e-324, -1e308), Complex(1.0 / 3.0, 2.0 / 3.0),
                             Complex(std::numbers::pi, -std::numbers::e)};
    const ComplexMatrix m(2, odd);
    CHECK(bitwise_equal(parse_matrix(write_matrix(m)), m));
    CHECK(std::signbit(parse_matrix(write_matrix(m))(0, 0).real()));
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto g = testing::random_matrix(1 + s % 5, s);
        const auto text = write_matrix(g);
        CHECK(bitwise_equal(parse_matrix(text), g));
        CHECK(write_matrix(parse_matrix(text)) == text);
    }

    const auto message = [](const char* doc) {
        try {
            parse_matrix(doc);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message(R"({"n":2,"entries":[[[1,0],[0,0]],[[1,0]]]})").find("row 1") != std::string::npos);
    CHECK(message(R"({"n":2,"entries":[[[1,0],[0,0]]]})").find("rows") != std::string::npos);
    CHECK(message(R"({"n":1,"entries":[[[1e999,0]]]})").find("not finite") != std::string::npos);
    CHECK(message(R"({"n":1,"entries":[[["a",0]]]})").find("row 0, column 0") != std::string::npos);
    CHECK(message(R"({"n":1,"entries":[[[1,0]]})").find("byte") != std::string::npos);
    CHECK(message(R"({"entries":[]})").find("\"n\"") != std::string::npos);
    CHECK(message(R"([1,2])") != "no error");
}

TEST_CASE("analyze built-in fixtures") {
    const auto s3 = analyze(paper_example("shift3"));
    CHECK(s3.all_pass());
    CHECK(s3.bounds.w_sq == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(s3.bounds.th13 == doctest::Approx(0.75).epsilon(1e-10));
    CHECK(s3.bounds.kittaneh_upper == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s3.half_root_k.equality_holds);

    const auto ex = analyze(paper_example("ex_i"));
    CHECK(ex.all_pass());
    CHECK(ex.bounds.thn16 == doctest::Approx(5.65685424949).epsilon(1e-11));
    CHECK(ex.bounds.theor16 == doctest::Approx(4.89897948557).epsilon(1e-11));
    CHECK(ex.bounds.theor17 == doctest::Approx(4.0).epsilon(1e-12));

    const auto zero = analyze(ComplexMatrix::zeros(3));
    CHECK(zero.all_pass());
    CHECK(zero.bounds.w == 0.0);
    CHECK(zero.bounds.th13 == 0.0);

    // Every catalogued invariant shows up in the verdict list.
    const auto g = analyze(testing::random_matrix(4, 1));
    for (const char* id : {"th1.l2_le_w_sq", "cor1.le_w_sq", "thn16.dominates_theor16", "thp.monotone[r=1->1.5]",
                           "upper.w4_le_th14", "identity.k_equals_sum_diff_squares", "equality.triangle",
                           "equality.flat_implies_additive", "equality.half_root_k.implies_corp2",
                           "equality.half_norm.implies_bj", "hermitian.w_equals_norm", "lemma.buzano[A,A*]"}) {
        const auto it = std::find_if(g.verdicts.begin(), g.verdicts.end(), [&](const Verdict& v) { return v.id == id; });
        CHECK_MESSAGE(it != g.verdicts.end(), id);
    }
    AnalysisConfig bad;
    bad.r_list = {0.5};
    CHECK_THROWS_AS(analyze(ComplexMatrix::identity(2), bad), DomainError);
}

TEST_CASE("reports") {
    const auto r = analyze(paper_example("ex_ii"));
    const ReportOptions no_time{false};
    const std::string a = report_to_json(r, no_time);
    const std::string b = report_to_json(analyze(paper_example("ex_ii")), no_time);
    CHECK(a == b);
    CHECK(a.find("wall_ms") == std::string::npos);

    const auto j = nlohmann::json::parse(a);
    for (const char* section : {"input", "lower_bounds", "upper_bounds", "w_sq", "equality", "verdicts"}) {
        CHECK_MESSAGE(j.contains(section), section);
    }
    CHECK(j["lower_bounds"]["theor17"].get<double>() == doctest::Approx(11.25));
    CHECK(j["w_sq"]["w_sq"].get<double>() == r.bounds.w_sq);
    CHECK(nlohmann::json::parse(report_to_json(r)).contains("timings"));

    const std::string csv = report_to_csv(r, no_time);
    CHECK(csv.rfind("section,key,value\n", 0) == 0);
    CHECK(csv.find("lower_bounds,theor17,11.25\n") != std::string::npos);
    CHECK(csv.find("\"lemma.buzano[A,A*]\",pass") != std::string::npos);
}

TEST_CASE("corpus verification") {
    CorpusConfig empty;
    empty.count = 0;
    const auto e = verify_corpus(empty);
    CHECK(e.matrices == 0);
    CHECK(e.ok());
    CHECK(e.invariants.empty());

    CorpusConfig small;
    small.count = 14;
    small.max_dim = 4;
    small.threads = 1;
    const auto serial = verify_corpus(small);
    small.threads = 3;
    const auto threaded = verify_corpus(small);
    CHECK(serial.ok());
    CHECK(summary_to_json(serial, {false}) == summary_to_json(threaded, {false}));

    // Replay: the digest regenerates the same matrix and verdicts.
    const auto spec = corpus_spec(small, 9);
    CHECK(spec.kind == small.kinds[9 % small.kinds.size()]);
    const auto first = analyze(generate(spec));
    const auto again = analyze(generate(spec));
    REQUIRE(first.verdicts.size() == again.verdicts.size());
    for (std::size_t i = 0; i < first.verdicts.size(); ++i) {
        CHECK(first.verdicts[i].status == again.verdicts[i].status);
        CHECK(first.verdicts[i].lhs == again.verdicts[i].lhs);
    }

    CorpusConfig herm;
    herm.count = 10;
    herm.kinds = {MatrixKind::hermitian};
    herm.threads = 1;
    const auto h = verify_corpus(herm);
    const auto it = std::find_if(h.invariants.begin(), h.invariants.end(),
                                 [](const InvariantStats& s) { return s.id == "hermitian.w_equals_norm"; });
    REQUIRE(it != h.invariants.end());
    CHECK(it->passed == 10);

    CorpusConfig bad;
    bad.kinds = {MatrixKind::paper_example};
    CHECK_THROWS_AS(verify_corpus(bad), DomainError);
}

TEST_CASE("sharpness search") {
    CHECK(bound_ratio("kittaneh_lower", ComplexMatrix::unit(2, 0, 1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bound_ratio("kittaneh_upper", ComplexMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(bound_ratio("th13", ComplexMatrix::zeros(2)) == 0.0);
    CHECK_THROWS_AS(bound_ratio("nope", ComplexMatrix::identity(2)), ParseError);
    for (auto id : searchable_bounds()) {
        const double r = bound_ratio(id, testing::random_matrix(3, 4));
        CHECK_MESSAGE(r <= 1.0 + 1e-7, id);
        CHECK_MESSAGE(r > 0.0, id);
    }

    SearchConfig c;
    c.iters = 0;
    const auto seed_only = sharpness_search(c);
    CHECK(seed_only.evaluations == 0);
    CHECK(seed_only.ratio == bound_ratio(c.bound_id, seed_only.best));
    CHECK(seed_only.best.frobenius_norm() == doctest::Approx(1.0));

    c.iters = 300;
    const auto short_run = sharpness_search(c);
    CHECK(short_run.ratio >= seed_only.ratio);
    CHECK(short_run.ratio <= 1.0 + 1e-9);
    CHECK(bitwise_equal(short_run.best, sharpness_search(c).best));

    c.bound_id = "dragomir";
    CHECK_THROWS_AS(sharpness_search(SearchConfig{"unknown"}), ParseError);
}

TEST_CASE("range export") {
    const std::string csv = export_range(ComplexMatrix::unit(2, 0, 1), 360, ExportFormat::csv);
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const double re = std::stod(line.substr(0, comma));
        const double im = std::stod(line.substr(comma + 1));
        CHECK(std::abs(std::hypot(re, im) - 0.5) <= 1e-8);
        ++rows;
    }
    CHECK(rows == 360);

    std::istringstream seg(export_range(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, 32, ExportFormat::csv));
    while (std::getline(seg, line)) {
        CHECK(std::abs(std::stod(line.substr(line.find(',') + 1))) <= 1e-9);
    }

    const std::string svg = export_range(paper_example("ex_ii"), 64, ExportFormat::svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg == export_range(paper_example("ex_ii"), 64, ExportFormat::svg));
    CHECK_THROWS_AS(export_range(ComplexMatrix::identity(2), 7, ExportFormat::csv), DomainError);
    CHECK(parse_export_format("svg") == ExportFormat::svg);
    CHECK_THROWS_AS(parse_export_format("png"), ParseError);

    const std::vector<Complex> pts{0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0), Complex(0.5, 0.5), 0.5, 1.0};
    const auto hull = convex_hull(pts);
    CHECK(hull == std::vector<Complex>{0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0)});
}
