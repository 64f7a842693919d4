#include "wradius/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace wradius {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json matrix_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(complex_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json digest_json(const MatrixDigest& d) {
    Json j;
    j["label"] = d.label();
    j["n"] = d.n;
    if (d.spec) {
        j["kind"] = to_string(d.spec->kind);
        if (d.spec->kind == MatrixKind::paper_example) {
            j["example_id"] = d.spec->example_id;
        } else {
            j["seed"] = d.spec->seed;
            j["scale"] = d.spec->scale;
        }
    }
    if (!d.path.empty()) {
        j["path"] = d.path;
    }
    if (d.corpus_index) {
        j["corpus_index"] = *d.corpus_index;
    }
    return j;
}

Json verdict_json(const Verdict& v) {
    Json j;
    j["id"] = v.id;
    j["status"] = to_string(v.status);
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    j["slack"] = v.slack;
    if (!v.note.empty()) {
        j["note"] = v.note;
    }
    return j;
}

Json equality_json(const EqualityReport& e) {
    Json j;
    j["target"] = e.target;
    j["w"] = e.w;
    j["residual"] = e.residual;
    j["equality_holds"] = e.equality_holds;
    j["disk_consistent"] = e.disk_consistent;
    return j;
}

// Flat (section, key, value) view shared by the JSON and CSV writers.
struct Field {
    const char* section;
    std::string key;
    double value;
};

std::vector<Field> numeric_fields(const ChainReport& r) {
    const BoundReport& b = r.bounds;
    std::vector<Field> f{
        {"lower_bounds", "kittaneh_lower", b.kittaneh_lower},
        {"lower_bounds", "th1_l1", b.th1_l1},
        {"lower_bounds", "th1_l2", b.th1_l2},
        {"lower_bounds", "cor1", b.cor1},
        {"lower_bounds", "beta1", b.beta1},
        {"lower_bounds", "beta2", b.beta2},
        {"lower_bounds", "beta_max", b.beta_max},
        {"lower_bounds", "remark_refined", b.remark_refined},
        {"lower_bounds", "theor16", b.theor16},
        {"lower_bounds", "thn16", b.thn16},
        {"lower_bounds", "theor17", b.theor17},
    };
    for (const auto& t : b.thp) {
        f.push_back({"lower_bounds", fmt::format("thp[r={}]", t.r), t.value});
    }
    f.push_back({"lower_bounds", "thp_limit", b.thp_limit});
    const std::vector<Field> rest{
        {"upper_bounds", "kittaneh_upper", b.kittaneh_upper},
        {"upper_bounds", "dragomir", b.dragomir},
        {"upper_bounds", "th13", b.th13},
        {"upper_bounds", "th13_t", b.th13_t},
        {"upper_bounds", "th14_w4", b.th14_w4},
        {"upper_bounds", "th14_as_sq", b.th14_as_sq},
        {"upper_bounds", "thp1_w3", b.thp1_w3},
        {"upper_bounds", "thp1_as_sq", b.thp1_as_sq},
        {"w_sq", "w", b.w},
        {"w_sq", "w_sq", b.w_sq},
        {"w_sq", "norm", b.norm},
        {"w_sq", "identity_residual", b.identity_residual},
    };
    f.insert(f.end(), rest.begin(), rest.end());
    return f;
}

std::string dump(const Json& j, const ReportOptions& options) {
    return j.dump(options.indent) + "\n";
}

std::string csv_number(double x) {
    return fmt::format("{:.17g}", x);
}

// Quotes a CSV cell when it contains a separator or a quote.
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

}  // namespace

std::string report_to_json(const ChainReport& r, const ReportOptions& options) {
    Json j;
    j["input"] = digest_json(r.digest);
    j["input"]["matrix"] = matrix_json(r.matrix);
    for (const Field& f : numeric_fields(r)) {
        j[f.section][f.key] = f.value;
    }

    Json eq;
    eq["half_norm"] = equality_json(r.half_norm);
    eq["half_root_k"] = equality_json(r.half_root_k);
    eq["flatness"] = {{"mean", r.half_norm.flatness.mean},
                      {"max_dev", r.half_norm.flatness.max_dev},
                      {"flat", r.half_norm.flat}};
    Json translations = Json::array();
    for (const auto& t : r.half_norm.translation_checks) {
        translations.push_back({{"lambda", complex_json(t.lambda)},
                                {"w_shifted", t.w_shifted},
                                {"w_plus_abs", t.w_plus_abs},
                                {"residual", t.residual}});
    }
    eq["translation_checks"] = std::move(translations);
    const Corp2Consequences& c = r.half_root_k.corp2;
    eq["corp2"] = {{"crawford_plus", c.crawford_plus},     {"crawford_minus", c.crawford_minus},
                   {"norm_plus_sq", c.norm_plus_sq},       {"norm_minus_sq", c.norm_minus_sq},
                   {"half_k", c.half_k},                   {"crawfords_vanish", c.crawfords_vanish},
                   {"squares_coincide", c.squares_coincide}, {"all_match", c.all_match}};
    eq["bj_orthogonality"] = {{"min_gap", r.bj.min_gap}, {"max_excess", r.bj.max_excess}, {"orthogonal", r.bj.orthogonal}};
    j["equality"] = std::move(eq);

    Json verdicts = Json::array();
    for (const Verdict& v : r.verdicts) {
        verdicts.push_back(verdict_json(v));
    }
    j["verdicts"] = std::move(verdicts);
    j["errors"] = r.bounds.errors;
    j["all_pass"] = r.all_pass();
    if (options.timings) {
        j["timings"] = {{"wall_ms", r.wall_ms}};
    }
    return dump(j, options);
}

std::string report_to_csv(const ChainReport& r, const ReportOptions& options) {
    std::string out = "section,key,value\n";
    out += fmt::format("input,label,{}\n", csv_cell(r.digest.label()));
    out += fmt::format("input,n,{}\n", r.matrix.dim());
    for (const Field& f : numeric_fields(r)) {
        out += fmt::format("{},{},{}\n", f.section, csv_cell(f.key), csv_number(f.value));
    }
    for (const EqualityReport* e : {&r.half_norm, &r.half_root_k}) {
        const auto name = to_string(e->case_id);
        out += fmt::format("equality,{}.target,{}\n", name, csv_number(e->target));
        out += fmt::format("equality,{}.residual,{}\n", name, csv_number(e->residual));
        out += fmt::format("equality,{}.equality_holds,{}\n", name, e->equality_holds);
    }
    out += fmt::format("equality,flatness.max_dev,{}\n", csv_number(r.half_norm.flatness.max_dev));
    out += fmt::format("equality,bj.min_gap,{}\n", csv_number(r.bj.min_gap));
    for (const Verdict& v : r.verdicts) {
        out += fmt::format("verdict,{},{}\n", csv_cell(v.id), to_string(v.status));
    }
    if (options.timings) {
        out += fmt::format("timings,wall_ms,{}\n", csv_number(r.wall_ms));
    }
    return out;
}

std::string summary_to_json(const CorpusSummary& s, const ReportOptions& options) {
    Json j;
    j["matrices"] = s.matrices;
    j["violations"] = s.violations();
    Json inv = Json::array();
    for (const auto& st : s.invariants) {
        inv.push_back({{"id", st.id},
                       {"passed", st.passed},
                       {"failed", st.failed},
                       {"skipped", st.skipped},
                       {"worst_slack", st.worst_slack},
                       {"worst_label", st.worst_label}});
    }
    j["invariants"] = std::move(inv);
    Json failures = Json::array();
    for (const auto& f : s.failures) {
        Json d = digest_json(f.digest);
        d["failed"] = f.failed_ids;
        failures.push_back(std::move(d));
    }
    j["failures"] = std::move(failures);
    if (options.timings) {
        j["timings"] = {{"wall_ms", s.wall_ms}};
    }
    return dump(j, options);
}

std::string summary_to_csv(const CorpusSummary& s) {
    std::string out = "id,passed,failed,skipped,worst_slack,worst_label\n";
    for (const auto& st : s.invariants) {
        out += fmt::format("{},{},{},{},{},{}\n", csv_cell(st.id), st.passed, st.failed, st.skipped,
                           csv_number(st.worst_slack), csv_cell(st.worst_label));
    }
    return out;
}

std::string search_to_json(const SearchResult& r, const ReportOptions& options) {
    Json j;
    j["bound_id"] = r.bound_id;
    j["lower_bound"] = is_lower_bound(r.bound_id);
    j["ratio"] = r.ratio;
    j["evaluations"] = r.evaluations;
    j["best"] = {{"n", r.best.dim()}, {"entries", matrix_json(r.best)}};
    return dump(j, options);
}

std::string search_to_csv(const SearchResult& r) {
    return fmt::format("bound_id,ratio,evaluations\n{},{},{}\n", r.bound_id, csv_number(r.ratio), r.evaluations);
}

}  // namespace wradius
