#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nwfpp/theory.hpp"

using namespace nwfpp;

namespace {

double char_poly(double rho, double x) { return x * x + (1.0 - rho) * x - 2.0 * rho; }

// independent oracle: bisection root of the characteristic polynomial
double lambda_by_bisection(double rho) {
    double lo = 0.0, hi = rho + 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (char_poly(rho, mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// independent oracle: matrix exponential by scaling and squaring of the
// Taylor series
mat2 expm_series(const mat2& q, double t) {
    int squarings = 0;
    double scale = t;
    while (std::abs(scale) > 0.5) {
        scale /= 2.0;
        ++squarings;
    }
    mat2 a{{{q.a[0][0] * scale, q.a[0][1] * scale}, {q.a[1][0] * scale, q.a[1][1] * scale}}};
    mat2 total{{{1, 0}, {0, 1}}};
    mat2 term{{{1, 0}, {0, 1}}};
    for (int k = 1; k <= 30; ++k) {
        term = term * a;
        for (auto& row : term.a)
            for (auto& x : row) x /= k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) total.a[i][j] += term.a[i][j];
    }
    for (int s = 0; s < squarings; ++s) total = total * total;
    return total;
}

} // namespace

TEST_CASE("closed-form constants at rho = 1") {
    const model_constants k = constants(1.0);
    CHECK(k.lambda == doctest::Approx(1.4142135623730951).epsilon(1e-14));
    CHECK(k.lambda2 == doctest::Approx(-1.4142135623730951).epsilon(1e-14));
    CHECK(k.pi_red() == doctest::Approx(0.585786437626905).epsilon(1e-14));
    CHECK(k.pi_blue() == doctest::Approx(0.4142135623730951).epsilon(1e-14));
    CHECK(k.u_red() == doctest::Approx(0.8535533905932736).epsilon(1e-14));
    CHECK(k.u_blue() == doctest::Approx(1.2071067811865475).epsilon(1e-14));
    CHECK(k.c == doctest::Approx(-1.4161735837591134).epsilon(1e-13));
    CHECK(ihrg_constant(k) == doctest::Approx(-1.1989348821105468).epsilon(1e-13));
}

TEST_CASE("eigen identities across the rho grid") {
    for (const double rho : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        CAPTURE(rho);
        const model_constants k = constants(rho);
        CHECK(std::abs(char_poly(rho, k.lambda)) < 1e-12 * (1.0 + rho * rho));
        CHECK(k.lambda == doctest::Approx(lambda_by_bisection(rho)).epsilon(1e-12));
        // pi Q = lambda pi
        for (int j = 0; j < 2; ++j) {
            const double lhs = k.pi[0] * k.Q.a[0][j] + k.pi[1] * k.Q.a[1][j];
            CHECK(std::abs(lhs - k.lambda * k.pi[j]) < 1e-12);
        }
        // Q u = lambda u
        for (int i = 0; i < 2; ++i) {
            const double lhs = k.Q.a[i][0] * k.u[0] + k.Q.a[i][1] * k.u[1];
            CHECK(std::abs(lhs - k.lambda * k.u[i]) < 1e-12);
        }
        CHECK(std::abs(k.pi[0] * k.u[0] + k.pi[1] * k.u[1] - 1.0) < 1e-12);
        CHECK(std::abs(k.pi[0] + k.pi[1] - 1.0) < 1e-12);
        CHECK(k.pi_red() == doctest::Approx(2.0 / (k.lambda + 2.0)).epsilon(1e-14));
        CHECK(std::abs(k.c - (std::log(1.0 - k.pi_red() * k.pi_red() / 2.0) -
                              std::log(k.lambda * (k.lambda + 1.0)))) < 1e-14);
        CHECK(k.lambda > 0.0);
        CHECK(k.lambda2 < 0.0);
        CHECK(2.0 * k.lambda2 < k.lambda);
        CHECK(k.lambda > rho - 1.0);
        CHECK(std::isfinite(ihrg_constant(k)));
    }
    // lambda(rho)/rho -> 1
    CHECK(constants(1e3).lambda / 1e3 == doctest::Approx(1.0).epsilon(0.01));
    // the two additive constants differ
    const model_constants k1 = constants(1.0);
    CHECK(std::abs(ihrg_constant(k1) - k1.c) > 0.1);
}

TEST_CASE("constants rejects rho <= 0") {
    CHECK_THROWS_AS(constants(0.0), std::domain_error);
    CHECK_THROWS_AS(constants(-1.0), std::domain_error);
}

TEST_CASE("mean matrix") {
    const model_constants k = constants(1.0);
    const mat2 id = mean_matrix(k, 0.0);
    CHECK(id.a[0][0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(id.a[0][1] == doctest::Approx(0.0).scale(1).epsilon(1e-14));
    CHECK(id.a[1][0] == doctest::Approx(0.0).scale(1).epsilon(1e-14));
    CHECK(id.a[1][1] == doctest::Approx(1.0).epsilon(1e-14));

    // semigroup M(1)M(1) = M(2)
    const mat2 m1 = mean_matrix(k, 1.0);
    const mat2 m2 = mean_matrix(k, 2.0);
    const mat2 mm = m1 * m1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(mm.a[i][j] == doctest::Approx(m2.a[i][j]).epsilon(1e-9));

    // series oracle, rho = 1, t = 1
    const mat2 oracle = expm_series(k.Q, 1.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(m1.a[i][j] == doctest::Approx(oracle.a[i][j]).epsilon(1e-9));
    CHECK(m1.a[1][0] == doctest::Approx(2.73659774).epsilon(1e-7));
    CHECK(m1.a[1][1] == doctest::Approx(2.17818356).epsilon(1e-7));

    // oracle at rho = 2, t = 0.5
    const model_constants k2 = constants(2.0);
    const mat2 m05 = mean_matrix(k2, 0.5);
    const mat2 oracle2 = expm_series(k2.Q, 0.5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(m05.a[i][j] == doctest::Approx(oracle2.a[i][j]).epsilon(1e-9));

    // row sums grow like u_i e^{lambda t}: the level carries a log(u_i)/t
    // bias, the growth rate converges exponentially fast
    for (const double rho : {0.5, 2.0}) {
        const model_constants kk = constants(rho);
        const mat2 m20 = mean_matrix(kk, 20.0);
        const mat2 m21 = mean_matrix(kk, 21.0);
        for (int i = 0; i < 2; ++i) {
            const double row20 = m20.a[i][0] + m20.a[i][1];
            const double row21 = m21.a[i][0] + m21.a[i][1];
            const double bias = std::abs(std::log(kk.u[i])) / 20.0;
            CHECK(std::abs(std::log(row20) / 20.0 - kk.lambda) < bias + 1e-3);
            CHECK(std::log(row21) - std::log(row20) == doctest::Approx(kk.lambda).epsilon(1e-9));
        }
    }
}
