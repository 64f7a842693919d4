#include <doctest.h>

#include <cmath>
#include <limits>

#include "support.hpp"
#include "wradius/error.hpp"
#include "wradius/matrix.hpp"

using namespace wradius;
using namespace std::complex_literals;
using testing::max_entry_diff;
using testing::random_matrix;

TEST_CASE("construction rejects bad shapes and values") {
    CHECK_THROWS_AS(ComplexMatrix(0, {}), DomainError);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), DimensionError);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, {Complex(nan, 0.0)}), DomainError);
    CHECK_THROWS_AS(ComplexMatrix(1, {Complex(0.0, INFINITY)}), DomainError);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("adjoint") {
    CHECK(adjoint(ComplexMatrix{{1.0i}}) == ComplexMatrix{{-1.0i}});
    CHECK(adjoint(ComplexMatrix::unit(2, 0, 1)) == ComplexMatrix::unit(2, 1, 0));
    const auto a = random_matrix(5, 3);
    CHECK(adjoint(adjoint(a)) == a);
    const HermitianMatrix h = HermitianMatrix::real_part_of(a);
    CHECK(adjoint(h.matrix()) == h.matrix());
}

TEST_CASE("multiply") {
    const auto m = random_matrix(4, 7);
    CHECK(m * ComplexMatrix::identity(4) == m);
    const auto e12 = ComplexMatrix::unit(2, 0, 1);
    CHECK(e12 * e12 == ComplexMatrix::zeros(2));
    CHECK_THROWS_AS(multiply(m, ComplexMatrix::zeros(3)), DimensionError);

    // Hand product.
    const ComplexMatrix a{{1.0, 1.0i}, {2.0, 0.0}};
    const ComplexMatrix b{{1.0i, 1.0}, {1.0, -1.0}};
    CHECK(a * b == ComplexMatrix{{2.0i, 1.0 - 1.0i}, {2.0i, 2.0}});

    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto x = random_matrix(5, 100 + s);
        const auto y = random_matrix(5, 200 + s);
        CHECK(max_entry_diff(adjoint(x * y), adjoint(y) * adjoint(x)) <= 1e-13);
    }
}

TEST_CASE("cartesian parts") {
    const auto ex_i = cartesian_parts(ComplexMatrix{{2.0 + 2.0i, 0.0}, {0.0, 0.0}});
    CHECK(ex_i.re.matrix() == ComplexMatrix{{2.0, 0.0}, {0.0, 0.0}});
    CHECK(ex_i.im.matrix() == ComplexMatrix{{2.0, 0.0}, {0.0, 0.0}});

    const auto ex_ii = cartesian_parts(ComplexMatrix{{3.0 + 2.0i, 0.0}, {0.0, 4.0i}});
    CHECK(ex_ii.re.matrix() == ComplexMatrix{{3.0, 0.0}, {0.0, 0.0}});
    CHECK(ex_ii.im.matrix() == ComplexMatrix{{2.0, 0.0}, {0.0, 4.0}});

    const auto a = random_matrix(6, 11);
    const auto p = cartesian_parts(a);
    const ComplexMatrix back = p.re.matrix() + Complex(0.0, 1.0) * p.im.matrix();
    CHECK(max_entry_diff(back, a) <= 1e-14 * (1.0 + a.max_abs()));

    const HermitianMatrix h = HermitianMatrix::real_part_of(a);
    const auto hp = cartesian_parts(h);
    CHECK(hp.re.matrix() == h.matrix());
    CHECK(hp.im.matrix().max_abs() == 0.0);
}

TEST_CASE("Hermitian construction tolerance and exact symmetry") {
    CHECK_THROWS_AS(HermitianMatrix(ComplexMatrix::unit(2, 0, 1)), DomainError);
    const ComplexMatrix almost{{1.0, 2.0 + 1e-14}, {2.0, Complex(3.0, 1e-14)}};
    const HermitianMatrix h(almost);
    CHECK(h(0, 1) == std::conj(h(1, 0)));
    CHECK(h(1, 1).imag() == 0.0);
    CHECK(h.matrix().is_hermitian(0.0));
}

TEST_CASE("gram, cogram and quadratic forms") {
    const auto e12 = ComplexMatrix::unit(2, 0, 1);
    CHECK(gram(e12).matrix() == ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});
    CHECK(cogram(e12).matrix() == ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});

    const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0i}};
    const std::vector<Complex> x{1.0, 1.0i};
    // <Ax, x> = conj(x)^T A x = 1 + 2i + 0 + (-i)(i)(i) = 1 + 2i + i
    CHECK(std::abs(quadratic_form(a, x) - Complex(1.0, 3.0)) < 1e-15);
    CHECK(vector_norm(x) == doctest::Approx(std::sqrt(2.0)));
    CHECK(inner(x, x) == Complex(2.0, 0.0));
}

TEST_CASE("norms of entries") {
    const ComplexMatrix a{{3.0, 0.0}, {4.0i, 0.0}};
    CHECK(a.frobenius_norm() == doctest::Approx(5.0));
    CHECK(a.max_abs() == 4.0);
}
