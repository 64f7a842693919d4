#pragma once

#include <cmath>

namespace wradius {

struct LineOptimum {
    double x;
    double value;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops after max_iters shrink steps or once the bracket is narrower than
/// min_width. Returns the best point actually evaluated.
template <typename F>
LineOptimum golden_section_minimize(F&& f, double lo, double hi, int max_iters, double min_width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    LineOptimum best = fc <= fd ? LineOptimum{c, fc} : LineOptimum{d, fd};

    for (int it = 0; it < max_iters && (hi - lo) > min_width; ++it) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
            if (fc < best.value) {
                best = {c, fc};
            }
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
            if (fd < best.value) {
                best = {d, fd};
            }
        }
    }
    return best;
}

/// Maximization counterpart of golden_section_minimize.
template <typename F>
LineOptimum golden_section_maximize(F&& f, double lo, double hi, int max_iters, double min_width) {
    auto r = golden_section_minimize([&](double x) { return -f(x); }, lo, hi, max_iters, min_width);
    return {r.x, -r.value};
}

}  // namespace wradius
