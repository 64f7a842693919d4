#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "wradius/error.hpp"
#include "wradius/golden.hpp"
#include "wradius/range.hpp"
#include "wradius/spectral.hpp"

using namespace wradius;
using namespace std::complex_literals;
using testing::close;
using testing::random_matrix;

namespace {

// Largest |<Ax, x>| over random unit vectors: a lower estimate of w(A).
double rayleigh_max(const ComplexMatrix& a, int samples, std::uint64_t seed) {
    SplitMix64 rng(seed);
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        auto x = testing::random_vector(a.dim(), rng);
        const double nx = vector_norm(x);
        best = std::max(best, std::abs(quadratic_form(a, x)) / (nx * nx));
    }
    return best;
}

// Distance from the origin to the segment [p, q] in the plane.
double distance_to_segment(Complex p, Complex q) {
    const Complex d = q - p;
    const double t = std::clamp(-(p.real() * d.real() + p.imag() * d.imag()) / std::norm(d), 0.0, 1.0);
    return std::abs(p + t * d);
}

}  // namespace

TEST_CASE("golden section search") {
    const auto m = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, 0.0, 1.0, 200, 1e-12);
    CHECK(m.x == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
    const auto M = golden_section_maximize([](double x) { return std::sin(x); }, 0.0, 3.0, 200, 1e-12);
    CHECK(M.x == doctest::Approx(std::numbers::pi / 2).epsilon(1e-6));
}

TEST_CASE("rotated real part") {
    const auto a = random_matrix(3, 9);
    CHECK(testing::max_entry_diff(rotated_real_part(a, 0.0).matrix(), cartesian_parts(a).re.matrix()) < 1e-15);
    CHECK(testing::max_entry_diff(rotated_real_part(a, std::numbers::pi).matrix(),
                                  (-1.0 * cartesian_parts(a).re).matrix()) < 1e-14);
    for (double theta : {0.0, 0.7, 2.0, 5.5}) {
        const auto s = hermitian_eigen(rotated_real_part(ComplexMatrix::unit(2, 0, 1), theta));
        CHECK(s.values[0] == doctest::Approx(-0.5).epsilon(1e-14));
        CHECK(s.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("sweep profiles") {
    const auto id = sweep(ComplexMatrix::identity(2));
    for (std::size_t k = 0; k < id.angles.size(); ++k) {
        CHECK(id.values[k] == doctest::Approx(std::cos(id.angles[k])).epsilon(1e-13));
    }
    CHECK(id.max_value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(id.min_value == doctest::Approx(-1.0).epsilon(1e-13));

    const auto flat = sweep(ComplexMatrix::unit(2, 0, 1));
    for (double v : flat.values) {
        CHECK(v == doctest::Approx(0.5).epsilon(1e-14));
    }
    const auto zero = sweep(ComplexMatrix::zeros(3));
    CHECK(zero.max_value == 0.0);
    CHECK(zero.min_value == 0.0);

    const auto a = random_matrix(4, 21);
    const auto p = sweep(a);
    CHECK(p.max_value >= *std::max_element(p.values.begin(), p.values.end()));
    CHECK(p.min_value <= *std::min_element(p.values.begin(), p.values.end()));
    CHECK(close(support_value(a, p.argmax_angle), p.max_value, 1e-15));
}

TEST_CASE("numerical radius closed forms") {
    CHECK(numerical_radius(ComplexMatrix{{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}}) ==
          doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
    CHECK(numerical_radius(ComplexMatrix{{1.0, 0.0}, {0.0, 1.0i}}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(numerical_radius(ComplexMatrix::unit(2, 0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(numerical_radius(ComplexMatrix{{-2.0 + 1.0i}}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    // [[a, c], [0, -a]], a real: W is the ellipse with foci +-a and minor
    // semi-axis |c| / 2, so w = sqrt(a^2 + |c|^2 / 4).
    SplitMix64 rng(77);
    for (int k = 0; k < 20; ++k) {
        const double a = rng.gaussian();
        const Complex c = rng.complex_gaussian();
        const double expect = std::sqrt(a * a + std::norm(c) / 4.0);
        CHECK(close(numerical_radius(ComplexMatrix{{a, c}, {0.0, -a}}), expect, 1e-10));
    }
}

TEST_CASE("numerical radius against Rayleigh sampling") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto a = random_matrix(3, 300 + s);
        const double w = numerical_radius(a);
        const double r = rayleigh_max(a, 20000, s);
        CHECK(w >= r - 1e-12);
        CHECK(w <= r * 1.1);
    }
}

TEST_CASE("numerical radius invariances") {
    const auto a = random_matrix(4, 12);
    const double w = numerical_radius(a);
    const Complex s(0.3, -1.7);
    CHECK(close(numerical_radius(s * a), std::abs(s) * w, 1e-9));
    CHECK(close(numerical_radius(std::polar(1.0, 2.2) * a), w, 1e-9));
    const double norm = operator_norm(a);
    CHECK(w >= 0.5 * norm - 1e-8 * (1.0 + norm));
    CHECK(w <= norm + 1e-8 * (1.0 + norm));
}

TEST_CASE("Crawford number") {
    CHECK(crawford_number(ComplexMatrix::identity(2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(crawford_number(ComplexMatrix{{1.0, 0.0}, {0.0, 1.0i}}) ==
          doctest::Approx(distance_to_segment(1.0, 1.0i)).epsilon(1e-10));
    CHECK(distance_to_segment(1.0, 1.0i) == doctest::Approx(1.0 / std::numbers::sqrt2));
    CHECK(crawford_number(ComplexMatrix::unit(2, 0, 1)) == 0.0);
    CHECK(crawford_number(ComplexMatrix{{3.0 + 4.0i}}) == doctest::Approx(5.0).epsilon(1e-12));

    for (std::uint64_t s = 0; s < 5; ++s) {
        // Shifted Hermitian matrices, some definite, some not.
        const HermitianMatrix h(shift_diagonal(HermitianMatrix::real_part_of(random_matrix(4, 60 + s)).matrix(),
                                               static_cast<double>(s) - 1.0));
        CHECK(close(crawford_number(h.matrix()), crawford_hermitian(h), 1e-9));
    }
}

TEST_CASE("range boundary") {
    const auto disk = range_boundary(ComplexMatrix::unit(2, 0, 1), 360);
    REQUIRE(disk.points.size() == 360);
    for (Complex z : disk.points) {
        CHECK(std::abs(std::abs(z) - 0.5) <= 1e-8);
    }
    const auto seg = range_boundary(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}, 64);
    for (Complex z : seg.points) {
        CHECK(std::abs(z.imag()) <= 1e-9);
    }
    const auto d = range_boundary(ComplexMatrix{{1.0, 0.0}, {0.0, 1.0i}}, 64);
    double near1 = 10.0;
    double near_i = 10.0;
    for (Complex z : d.points) {
        near1 = std::min(near1, std::abs(z - 1.0));
        near_i = std::min(near_i, std::abs(z - 1.0i));
    }
    CHECK(near1 < 1e-12);
    CHECK(near_i < 1e-12);
    CHECK_THROWS_AS(range_boundary(ComplexMatrix::identity(2), 7), DomainError);
}

TEST_CASE("one by one matrices") {
    const ComplexMatrix a{{Complex(0.6, -0.8)}};
    CHECK(numerical_radius(a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(crawford_number(a) == doctest::Approx(1.0).epsilon(1e-12));
    const auto poly = range_boundary(a, 8);
    for (Complex z : poly.points) {
        CHECK(std::abs(z - a(0, 0)) < 1e-15);
    }
}

TEST_CASE("refinement looks past a misleading best sample") {
    // Two bumps: the coarse grid lands exactly on the lower one, while the
    // higher one sits midway between samples.
    const int n = 16;
    const double cell = 2.0 * std::numbers::pi / n;
    const double peak1 = 2.0 * cell;
    const double peak2 = 10.5 * cell;
    const auto f = [&](double t) {
        return std::max({1.0 - 0.2 * (t - peak1) * (t - peak1), 1.0003 - 0.2 * (t - peak2) * (t - peak2), 0.5});
    };
    std::vector<double> values;
    for (double t : uniform_angles(n)) {
        values.push_back(f(t));
    }
    REQUIRE(*std::max_element(values.begin(), values.end()) == values[2]);
    SweepPolicy policy;
    policy.grid_n = n;
    const auto e = refine_periodic_max(f, values, policy);
    CHECK(e.value == doctest::Approx(1.0003).epsilon(1e-12));
    CHECK(e.angle == doctest::Approx(peak2).epsilon(1e-5));
}

TEST_CASE("sweep policy validation") {
    SweepPolicy p;
    p.grid_n = 8;
    CHECK_THROWS_AS(numerical_radius(ComplexMatrix::identity(2), p), DomainError);
    p = {};
    p.tol = 0.0;
    CHECK_THROWS_AS(sweep(ComplexMatrix::identity(2), p), DomainError);
}
