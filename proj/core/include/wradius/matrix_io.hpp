#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "wradius/matrix.hpp"

namespace wradius {

/// Parses {"n": <int>, "entries": [[[re, im], ...], ...]} (row-major, n rows
/// of n pairs). Throws ParseError with a byte offset for malformed JSON and
/// with the row / column for shape errors and non-finite values.
ComplexMatrix parse_matrix(std::string_view text);

/// Canonical form of the same document, one row per line. Numbers use the
/// shortest representation that reads back to the same double, so
/// parse_matrix(write_matrix(m)) == m bit-wise.
std::string write_matrix(const ComplexMatrix& m);

/// File wrappers; throw Error on I/O failure.
ComplexMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace wradius
