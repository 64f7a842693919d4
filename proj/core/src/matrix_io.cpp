#include "wradius/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "wradius/error.hpp"

namespace wradius {

namespace {

using nlohmann::json;

double entry_part(const json& v, std::size_t row, std::size_t col, const char* part) {
    if (!v.is_number()) {
        throw ParseError(fmt::format("row {}, column {}: {} part is not a number", row, col, part));
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw ParseError(fmt::format("row {}, column {}: {} part is not finite", row, col, part));
    }
    return x;
}

std::string number(double x) {
    return json(x).dump();
}

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("malformed matrix document at byte {}: {}", e.byte, e.what()));
    } catch (const json::out_of_range&) {
        throw ParseError("matrix document holds a number that overflows a double and is not finite");
    }
    if (!doc.is_object()) {
        throw ParseError("matrix document must be a JSON object");
    }
    const auto n_it = doc.find("n");
    if (n_it == doc.end() || !n_it->is_number_integer() || n_it->get<long long>() < 1) {
        throw ParseError("matrix document needs a positive integer field \"n\"");
    }
    const auto n = static_cast<std::size_t>(n_it->get<long long>());
    const auto e_it = doc.find("entries");
    if (e_it == doc.end() || !e_it->is_array()) {
        throw ParseError("matrix document needs an array field \"entries\"");
    }
    const json& rows = *e_it;
    if (rows.size() != n) {
        throw ParseError(fmt::format("entries has {} rows, expected n = {}", rows.size(), n));
    }
    std::vector<Complex> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array()) {
            throw ParseError(fmt::format("row {} is not an array", i));
        }
        if (row.size() != n) {
            throw ParseError(fmt::format("row {} has {} entries, expected {}", i, row.size(), n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const json& z = row[j];
            if (!z.is_array() || z.size() != 2) {
                throw ParseError(fmt::format("row {}, column {}: entry must be a [re, im] pair", i, j));
            }
            data.emplace_back(entry_part(z[0], i, j, "real"), entry_part(z[1], i, j, "imaginary"));
        }
    }
    return ComplexMatrix(n, std::move(data));
}

std::string write_matrix(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    std::string out = fmt::format("{{\"n\": {}, \"entries\": [\n", n);
    for (std::size_t i = 0; i < n; ++i) {
        out += "  [";
        for (std::size_t j = 0; j < n; ++j) {
            out += fmt::format("{}[{}, {}]", j == 0 ? "" : ", ", number(m(i, j).real()), number(m(i, j).imag()));
        }
        out += i + 1 < n ? "],\n" : "]\n";
    }
    out += "]}\n";
    return out;
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open matrix file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    out << write_matrix(m);
    if (!out) {
        throw Error("cannot write matrix file " + path.string());
    }
}

}  // namespace wradius
