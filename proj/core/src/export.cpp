#include "wradius/export.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "wradius/error.hpp"

namespace wradius {

namespace {

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

std::string to_csv(std::span<const Complex> points) {
    std::string out;
    for (Complex z : points) {
        out += fmt::format("{:.17g},{:.17g}\n", z.real(), z.imag());
    }
    return out;
}

std::string to_svg(std::span<const Complex> boundary, double w) {
    const auto hull = convex_hull(boundary);
    // Drawing coordinates: the circle of radius w fills the frame with a 10%
    // margin; y points down in SVG.
    const double half = 1.1 * std::max(w, 1e-12);
    const double size = 400.0;
    const double k = size / (2.0 * half);
    const auto x = [&](Complex z) { return (z.real() + half) * k; };
    const auto y = [&](Complex z) { return (half - z.imag()) * k; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", size);
    out += fmt::format("  <circle cx=\"{0:.6f}\" cy=\"{0:.6f}\" r=\"{1:.6f}\" fill=\"none\" stroke=\"#999\" "
                       "stroke-dasharray=\"4 3\"/>\n",
                       half * k, w * k);
    out += "  <polyline fill=\"#cde\" stroke=\"#124\" points=\"";
    for (std::size_t i = 0; i <= hull.size() && !hull.empty(); ++i) {
        const Complex z = hull[i % hull.size()];
        out += fmt::format("{}{:.6f},{:.6f}", i ? " " : "", x(z), y(z));
    }
    out += "\"/>\n";
    out += fmt::format("  <circle cx=\"{:.6f}\" cy=\"{:.6f}\" r=\"3\" fill=\"#c00\"/>\n", x(0.0), y(0.0));
    out += "</svg>\n";
    return out;
}

}  // namespace

ExportFormat parse_export_format(std::string_view s) {
    if (s == "csv") {
        return ExportFormat::csv;
    }
    if (s == "svg") {
        return ExportFormat::svg;
    }
    throw ParseError("unknown export format '" + std::string(s) + "'");
}

std::vector<Complex> convex_hull(std::span<const Complex> points) {
    std::vector<Complex> p(points.begin(), points.end());
    std::sort(p.begin(), p.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) {
        return p;
    }
    std::vector<Complex> hull(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) {
            --k;
        }
        hull[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) {
            --k;
        }
        hull[k++] = p[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::string export_range(const ComplexMatrix& a, int m, ExportFormat format, const SweepPolicy& policy) {
    const RangePolygon poly = range_boundary(a, m);
    if (format == ExportFormat::csv) {
        return to_csv(poly.points);
    }
    return to_svg(poly.points, numerical_radius(a, policy));
}

}  // namespace wradius
