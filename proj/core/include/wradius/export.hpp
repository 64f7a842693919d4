#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wradius/matrix.hpp"
#include "wradius/range.hpp"

namespace wradius {

enum class ExportFormat { csv, svg };

/// Throws ParseError on anything but "csv" / "svg".
ExportFormat parse_export_format(std::string_view s);

/// Convex hull by Andrew's monotone chain, counter-clockwise, starting at the
/// leftmost (then lowest) point; collinear and repeated points are dropped.
std::vector<Complex> convex_hull(std::span<const Complex> points);

/// Boundary of W(A) sampled at m angles (m >= 8, else DomainError).
///   csv: one "re,im" line per boundary point, 17 significant digits, no header.
///   svg: the hull as one closed polyline, a marker at the origin and the
///        circle of radius w(A).
std::string export_range(const ComplexMatrix& a, int m, ExportFormat format, const SweepPolicy& policy = {});

}  // namespace wradius
