#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "gsm/banded.hpp"
#include "gsm/errors.hpp"

using namespace gsm;

namespace {

// Dense Gaussian elimination with partial pivoting, the reference solver.
std::vector<double> dense_solve(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        for (std::size_t i = j + 1; i < n; ++i) {
            if (std::abs(a[i][j]) > std::abs(a[p][j])) p = i;
        }
        std::swap(a[j], a[p]);
        std::swap(b[j], b[p]);
        for (std::size_t i = j + 1; i < n; ++i) {
            const double f = a[i][j] / a[j][j];
            for (std::size_t c = j; c < n; ++c) a[i][c] -= f * a[j][c];
            b[i] -= f * b[j];
        }
    }
    std::vector<double> x(n);
    for (std::size_t jj = n; jj-- > 0;) {
        double acc = b[jj];
        for (std::size_t c = jj + 1; c < n; ++c) acc -= a[jj][c] * x[c];
        x[jj] = acc / a[jj][jj];
    }
    return x;
}

}  // namespace

TEST_CASE("identity and scalar systems") {
    BandedMatrix eye(4, 1, 1);
    for (std::size_t i = 0; i < 4; ++i) eye.at(i, i) = 1.0;
    const std::vector<double> b{1.0, -2.0, 3.5, 0.25};
    CHECK(banded_solve(eye, b) == b);

    BandedMatrix scalar(1, 0, 0);
    scalar.at(0, 0) = 4.0;
    CHECK(banded_solve(scalar, {10.0})[0] == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("discrete Laplacian against the dense reference") {
    BandedMatrix lap(5, 1, 1);
    std::vector<std::vector<double>> dense(5, std::vector<double>(5, 0.0));
    for (std::size_t i = 0; i < 5; ++i) {
        lap.at(i, i) = 2.0;
        dense[i][i] = 2.0;
        if (i + 1 < 5) {
            lap.at(i, i + 1) = -1.0;
            lap.at(i + 1, i) = -1.0;
            dense[i][i + 1] = -1.0;
            dense[i + 1][i] = -1.0;
        }
    }
    const std::vector<double> b{1.0, 0.0, 2.0, -1.0, 0.5};
    const std::vector<double> x = banded_solve(lap, b);
    const std::vector<double> ref = dense_solve(dense, b);
    for (std::size_t i = 0; i < 5; ++i) CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-12));
}

TEST_CASE("random banded systems match the dense reference") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(rng() % 40);
        const std::size_t kl = rng() % std::min<std::size_t>(4, n);
        const std::size_t ku = rng() % std::min<std::size_t>(4, n);

        BandedMatrix a(n, kl, ku);
        std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = (i > kl ? i - kl : 0); j <= std::min(n - 1, i + ku); ++j) {
                const double value = entry(rng) + (i == j ? 4.0 : 0.0);
                a.at(i, j) = value;
                dense[i][j] = value;
            }
        }
        std::vector<double> b(n);
        for (double& v : b) v = entry(rng);

        const std::vector<double> x = banded_solve(a, b);
        const std::vector<double> ref = dense_solve(dense, b);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(x[i] == doctest::Approx(ref[i]).epsilon(1e-10));
        }

        // residual contract
        double x_norm = 0.0, b_norm = 0.0, r_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x_norm = std::max(x_norm, std::abs(x[i]));
            b_norm = std::max(b_norm, std::abs(b[i]));
            double r = -b[i];
            for (std::size_t j = 0; j < n; ++j) r += dense[i][j] * x[j];
            r_norm = std::max(r_norm, std::abs(r));
        }
        CHECK(r_norm <= 1e-10 * (a.inf_norm() * x_norm + b_norm));
    }
}

TEST_CASE("pivoting handles a zero diagonal") {
    // leading zero forces a row interchange
    BandedMatrix a(3, 1, 1);
    a.at(0, 0) = 0.0;
    a.at(0, 1) = 1.0;
    a.at(1, 0) = 2.0;
    a.at(1, 1) = 1.0;
    a.at(1, 2) = -1.0;
    a.at(2, 1) = 3.0;
    a.at(2, 2) = 1.0;
    const std::vector<double> x = banded_solve(a, {1.0, 2.0, 3.0});
    // row0: x1 = 1; row2: 3 x1 + x2 = 3 -> x2 = 0; row1: 2 x0 + 1 - 0 = 2
    CHECK(x[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[2] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("singular pivot is reported with its index") {
    BandedMatrix a(3, 1, 1);
    a.at(0, 0) = 1.0;
    a.at(1, 1) = 0.0;  // whole column 1 is zero
    a.at(2, 2) = 1.0;
    try {
        banded_solve(a, {1.0, 1.0, 1.0});
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
}

TEST_CASE("contract violations") {
    BandedMatrix a(4, 1, 1);
    CHECK_THROWS_AS(a.at(0, 2), ContractError);
    CHECK_THROWS_AS(a.at(3, 1), ContractError);
    for (std::size_t i = 0; i < 4; ++i) a.at(i, i) = 1.0;
    CHECK_THROWS_AS(banded_solve(a, {1.0, 2.0}), ContractError);
    CHECK(a.get(0, 3) == 0.0);  // outside the band reads as zero
}
