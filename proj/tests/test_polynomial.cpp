#include "curvmo/polynomial.hpp"

#include "curvmo/rng.hpp"

#include <doctest.h>

namespace {

using namespace curvmo;

Polynomial random_polynomial(Rng& rng, int dim, int max_degree, int terms) {
    Polynomial p(dim);
    for (int t = 0; t < terms; ++t) {
        MultiIndex e(dim, 0);
        int degree_left = max_degree;
        for (int i = 0; i < dim; ++i) {
            const int a = static_cast<int>(rng.uniform_int(0, degree_left));
            e[i] = a;
            degree_left -= a;
        }
        const Rational c(BigInt(rng.uniform_int(-9, 9)), BigInt(rng.uniform_int(1, 5)));
        p.add_term(e, c);
    }
    return p;
}

Polynomial random_homogeneous(Rng& rng, int dim, int degree, int terms) {
    Polynomial p(dim);
    for (int t = 0; t < terms; ++t) {
        MultiIndex e(dim, 0);
        for (int d = 0; d < degree; ++d) e[rng.uniform_int(0, dim - 1)] += 1;
        const Rational c(BigInt(rng.uniform_int(-9, 9)), BigInt(rng.uniform_int(1, 5)));
        p.add_term(e, c);
    }
    return p;
}

}  // namespace

TEST_CASE("addition drops cancelled terms") {
    const Polynomial x1_sq = Polynomial::monomial(2, {2, 0}, Rational(1));
    CHECK((x1_sq + Polynomial::monomial(2, {2, 0}, Rational(-1))).is_zero());

    const Polynomial sum = Polynomial::variable(2, 0) + Polynomial::variable(2, 1);
    CHECK(sum.term_count() == 2);
    CHECK(sum.degree() == 1);

    const Polynomial half = Polynomial::monomial(2, {1, 1}, make_rational(1, 2));
    CHECK(half + half == Polynomial::monomial(2, {1, 1}, Rational(1)));

    CHECK_THROWS_AS((void)(Polynomial(2) + Polynomial(3)), std::invalid_argument);
}

TEST_CASE("multiplication and degree truncation") {
    const Polynomial x = Polynomial::variable(2, 0);
    const Polynomial y = Polynomial::variable(2, 1);
    const Polynomial expected =
        Polynomial::monomial(2, {2, 0}, Rational(1)) + Polynomial::monomial(2, {0, 2}, Rational(-1));
    CHECK((x + y) * (x - y) == expected);

    const Polynomial x_sq = Polynomial::monomial(2, {2, 0}, Rational(1));
    CHECK(mul(x_sq, x_sq, 3).is_zero());

    const Polynomial one_plus_x = Polynomial::constant(2, Rational(1)) + x;
    const Polynomial truncated = mul(one_plus_x, one_plus_x, 1);
    CHECK(truncated == Polynomial::constant(2, Rational(1)) + x * Rational(2));
}

TEST_CASE("laplacian of simple polynomials") {
    CHECK(laplacian(Polynomial::monomial(2, {2, 0}, Rational(1))) ==
          Polynomial::constant(2, Rational(2)));
    CHECK(laplacian(Polynomial::monomial(2, {1, 1}, Rational(1))).is_zero());
}

TEST_CASE("iterated laplacian of norm powers matches the closed form") {
    // laplacian^k (x_1^2 + ... + x_m^2)^k at 0 equals 4^k k! [m/2 + k - 1]_k.
    for (int m = 2; m <= 6; ++m) {
        const Polynomial norm_sq = Polynomial::norm_squared(m);
        Polynomial power = Polynomial::constant(m, Rational(1));
        for (int k = 0; k <= 4; ++k) {
            const Rational value = laplacian_power(power, k).eval_at_zero();
            const Rational expected = rat_pow(Rational(4), k) * Rational(factorial(k)) *
                                      falling_factorial(Rational(m, 2) + (k - 1), k);
            CHECK(value == expected);
            power = power * norm_sq;
        }
    }
}

TEST_CASE("constant term extraction") {
    const Polynomial p = Polynomial::constant(2, Rational(3)) + Polynomial::variable(2, 0);
    CHECK(p.eval_at_zero() == 3);
    CHECK(Polynomial::monomial(2, {2, 0}, Rational(1)).eval_at_zero() == 0);

    // laplacian^2 of (x_1^2 + x_2^2)^2 at zero: 4^2 2! [2]_2 = 64.
    const Polynomial norm_sq = Polynomial::norm_squared(2);
    CHECK(laplacian_power(norm_sq * norm_sq, 2).eval_at_zero() == 64);
}

TEST_CASE("truncated exponential") {
    const Polynomial x = Polynomial::variable(1, 0);
    const Polynomial expected = Polynomial::constant(1, Rational(1)) + x +
                                Polynomial::monomial(1, {2}, make_rational(1, 2));
    CHECK(exp_truncated(x, 2) == expected);

    CHECK(exp_truncated(Polynomial(3), 4) == Polynomial::constant(3, Rational(1)));
    CHECK_THROWS_AS((void)exp_truncated(Polynomial::constant(2, Rational(1)), 2),
                    std::invalid_argument);
}

TEST_CASE("exponential of the space-form trace series follows the Newton expansion") {
    // exp(sum_r g^r / (2r) * (m-1)) truncated at degree 2k equals
    // sum_j C(-(m-1)/2, j) (-g)^j, both being (1 - g)^(-(m-1)/2).
    for (int m = 2; m <= 4; ++m) {
        const int k = 3;
        const Polynomial norm_sq = Polynomial::norm_squared(m);
        Polynomial argument(m);
        Polynomial g_power = Polynomial::constant(m, Rational(1));
        for (int r = 1; r <= k; ++r) {
            g_power = g_power * norm_sq;
            argument += g_power * Rational(m - 1, 2 * r);
        }
        const Polynomial series = exp_truncated(argument, 2 * k);

        Polynomial expected(m);
        g_power = Polynomial::constant(m, Rational(1));
        for (int j = 0; j <= k; ++j) {
            const Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
            expected += g_power * (gen_binomial(Rational(-(m - 1), 2), j) * sign);
            g_power = g_power * norm_sq;
        }
        CHECK(series == expected);
    }
}

TEST_CASE("laplacian is linear") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = static_cast<int>(rng.uniform_int(1, 4));
        const Polynomial p = random_polynomial(rng, dim, 5, 6);
        const Polynomial q = random_polynomial(rng, dim, 5, 6);
        const Rational a(BigInt(rng.uniform_int(-5, 5)), BigInt(rng.uniform_int(1, 4)));
        const Rational b(BigInt(rng.uniform_int(-5, 5)), BigInt(rng.uniform_int(1, 4)));
        CHECK(laplacian(p * a + q * b) == laplacian(p) * a + laplacian(q) * b);
    }
}

TEST_CASE("odd-degree polynomials have no constant term under iterated laplacians") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = static_cast<int>(rng.uniform_int(1, 4));
        const int degree = 2 * static_cast<int>(rng.uniform_int(0, 2)) + 1;
        Polynomial p = random_homogeneous(rng, dim, degree, 5);
        for (int iter = 0; iter <= degree / 2 + 1; ++iter) {
            CHECK(p.eval_at_zero() == 0);
            p = laplacian(p);
        }
    }
}

TEST_CASE("evaluation at rational points") {
    const Polynomial p = Polynomial::monomial(2, {2, 1}, make_rational(3, 2));
    const std::vector<Rational> point = {make_rational(2), make_rational(-1, 3)};
    CHECK(p.eval(point) == make_rational(3, 2) * 4 * make_rational(-1, 3));
}
