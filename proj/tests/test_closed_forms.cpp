#include "curvmo/closed_forms.hpp"

#include "curvmo/mc.hpp"
#include "curvmo/rng.hpp"

#include <doctest.h>

namespace {

using namespace curvmo;

MomentSequence unit_sphere_moments(int m, int k_max) {
    return make_constant_moments(m, Rational(1), k_max);
}

MomentSequence flat_moments(int m, int k_max) {
    return make_constant_moments(m, Rational(0), k_max);
}

}  // namespace

TEST_CASE("interval measure moments") {
    CHECK(cross_moment(0, 0, 0) == 1);
    CHECK(cross_moment(0, 0, 1) == 2);
    CHECK(cross_moment(0, 0, 2) == make_rational(24, 5));
    CHECK(cross_moment(3, 3, 1) == make_rational(12, 5));
}

TEST_CASE("interval measures reproduce the rank-one model moments") {
    // Two independent routes: the double-binomial sum of the measure family
    // and the Newton product expansion of the Jacobi spectra.
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k) {
            CHECK(cross_moment(0, n - 2, k) == psi_from_spectrum(make_cpn_spectrum(n), k));
            CHECK(cross_moment(1, 2 * n - 3, k) == psi_from_spectrum(make_hpn_spectrum(n), k));
        }
    for (int k = 0; k <= 6; ++k)
        CHECK(cross_moment(3, 3, k) == psi_from_spectrum(make_op2_spectrum(), k));
}

TEST_CASE("interval densities evaluate and normalize") {
    CHECK(cross_prefactor(3, 3) == make_rational(7, 6) * gen_binomial(make_rational(13, 2), 3));
    CHECK(cross_density_moment_quadrature(3, 3, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(cross_density_moment_quadrature(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-10));

    CHECK(cross_density_eval(3, 3, 1.0) == 0.0);
    CHECK(cross_density_eval(0, 0, 4.0) == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS((void)cross_density_eval(0, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS((void)cross_density_eval(1, 1, 4.5), std::domain_error);

    CHECK(cross_density_moment_quadrature(1, 1, 2) ==
          doctest::Approx(to_double(cross_moment(1, 1, 2))).epsilon(1e-10));

    // Positive on the open interval for every parameter pair.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (double s : {1.01, 2.0, 3.5, 3.99})
                CHECK(cross_density_eval(a, b, s) > 0.0);
}

TEST_CASE("product moments of sphere pairs") {
    const auto s2 = unit_sphere_moments(2, 4);
    CHECK(product_moment(s2, 2, s2, 2, 1) == make_rational(1, 3));
    CHECK(product_moment(s2, 2, s2, 2, 2) == make_rational(7, 45));

    const auto s3 = unit_sphere_moments(3, 4);
    const auto circle = flat_moments(1, 4);
    CHECK(product_moment(circle, 1, s3, 3, 1) == make_rational(1, 2));
    CHECK(product_moment(circle, 1, s3, 3, 2) == make_rational(1, 3));

    CHECK(product_moment(s3, 3, flat_moments(1, 4), 1, 0) == 1);
    CHECK_THROWS_AS((void)product_moment(s2, 2, s2, 2, 5), std::invalid_argument);
}

TEST_CASE("product moments are symmetric in the factors") {
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(1, 4));
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        MomentSequence left, right;
        left.dimension = m;
        right.dimension = n;
        left.values.emplace_back(1);
        right.values.emplace_back(1);
        for (int k = 1; k <= 3; ++k) {
            left.values.push_back(
                Rational(BigInt(rng.uniform_int(-9, 9)), BigInt(rng.uniform_int(1, 5))));
            right.values.push_back(
                Rational(BigInt(rng.uniform_int(-9, 9)), BigInt(rng.uniform_int(1, 5))));
        }
        for (int k = 0; k <= 3; ++k)
            CHECK(product_moment(left, m, right, n, k) == product_moment(right, n, left, m, k));
    }
}

TEST_CASE("product combinator agrees with the direct-sum tensor") {
    const auto s2 = make_constant_curvature(2, Rational(1));
    const auto s3 = make_constant_curvature(3, Rational(1));
    const auto random3 = random_tensor(3, 808, 5);
    const auto seq_s2 = moment_sequence(s2, 3);
    const auto seq_s3 = moment_sequence(s3, 3);
    const auto seq_random = moment_sequence(random3, 3);

    const auto check_pair = [&](const CurvatureTensor& a, const MomentSequence& seq_a, int m,
                                const CurvatureTensor& b, const MomentSequence& seq_b, int n) {
        const auto sum_moments = moment_sequence(direct_sum(a, b), 3);
        for (int k = 0; k <= 3; ++k)
            CHECK(product_moment(seq_a, m, seq_b, n, k) == sum_moments.values[k]);
    };
    check_pair(s2, seq_s2, 2, s3, seq_s3, 3);
    check_pair(s2, seq_s2, 2, random3, seq_random, 3);
    check_pair(random3, seq_random, 3, random3, seq_random, 3);

    // Flat one-dimensional factor: S^1 x S^3 through the m = 1 route.
    const auto s1xs3 = moment_sequence(direct_sum(make_zero(1), s3), 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(product_moment(flat_moments(1, 3), 1, seq_s3, 3, k) == s1xs3.values[k]);
}

TEST_CASE("real Grassmannian moments") {
    CHECK(gr2rn_moment(4, 1) == make_rational(2, 3));
    for (int n = 4; n <= 8; ++n)
        CHECK(gr2rn_moment(n, 1) == Rational(n - 2, 2 * n - 5));

    // The double cover by S^2 x S^2 with half the metric doubles moments.
    const auto s2 = unit_sphere_moments(2, 4);
    for (int k = 0; k <= 4; ++k)
        CHECK(gr2rn_moment(4, k) == rat_pow(Rational(2), k) * product_moment(s2, 2, s2, 2, k));

    CHECK_THROWS_AS((void)gr2rn_moment(3, 1), std::invalid_argument);
}

TEST_CASE("simplex monomial integrals") {
    CHECK(simplex_integral({0, 0, 0}) == make_rational(1, 2));
    CHECK(simplex_integral({0, 0, 2}) == make_rational(1, 12));
    CHECK(simplex_integral({1, 1}) == make_rational(1, 6));
    CHECK_THROWS_AS((void)simplex_integral({1, -1}), std::invalid_argument);

    // Quadrature oracle on the triangle for a mixed monomial.
    const auto integrand = [](double x) {
        // integral over y of x^1 y^2 dy from 0 to 1-x
        return x * std::pow(1.0 - x, 3) / 3.0;
    };
    CHECK(to_double(simplex_integral({0, 1, 2})) ==
          doctest::Approx(integrate_adaptive(integrand, 0.0, 1.0, 1e-12)).epsilon(1e-10));
}

TEST_CASE("one-sided kernel density in closed form") {
    const ProductKernel kernel{2, 2, 1.0, 0.0};
    CHECK(product_kernel_density(kernel, 0.25) == doctest::Approx(1.0));
    CHECK(product_kernel_density(kernel, 0.81) == doctest::Approx(1.0 / 0.9 - 1.0));

    const auto density = make_kernel_density(kernel);
    CHECK(density->integral() == doctest::Approx(1.0).epsilon(1e-10));

    // S^1 x S^3 kernel: dimension pair (3, 1), flat circle factor.
    const auto uniform = make_kernel_density(ProductKernel{3, 1, 1.0, 0.0});
    CHECK(uniform->eval(0.3) == doctest::Approx(1.0));
    CHECK(uniform->integral() == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS((void)make_kernel_density(ProductKernel{1, 2, 1.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("two-sided kernel histogram reproduces the product moments") {
    const McConfig config{256, 400000, 99};
    const auto density = make_kernel_density(ProductKernel{2, 2, 1.0, 1.0}, config);
    CHECK(density->integral() == doctest::Approx(1.0).epsilon(1e-3));

    const auto s2 = unit_sphere_moments(2, 4);
    for (int k = 1; k <= 2; ++k) {
        const auto estimate = mc_simplex(2, 2, 1.0, 1.0, k, 400000, 31);
        const double exact = to_double(product_moment(s2, 2, s2, 2, k));
        CHECK(std::abs(estimate.mean - exact) <= 4.0 * estimate.std_error);
    }
}

TEST_CASE("product densities compose atoms into kernels") {
    const auto s2_atom = make_atom_density(1.0);
    const auto product = product_density(s2_atom, 2, s2_atom, 2, McConfig{256, 200000, 5});
    const double mean = integrate_adaptive(
        [&](double s) { return s * product->eval(s); }, 0.0, 1.0, 1e-10);
    // Histogram-backed density: accuracy is statistical, not quadrature-grade.
    CHECK(mean == doctest::Approx(1.0 / 3.0).epsilon(1e-2));

    // Flat circle times unit 3-sphere: uniform density on [0, 1], mean 1/2.
    const auto s1xs3 = product_density(make_atom_density(1.0), 3, make_atom_density(0.0), 1);
    CHECK(s1xs3->eval(0.77) == doctest::Approx(1.0));
    const double mean_s1xs3 = integrate_adaptive(
        [&](double s) { return s * s1xs3->eval(s); }, 0.0, 1.0, 1e-10);
    CHECK(mean_s1xs3 == doctest::Approx(0.5).epsilon(1e-9));

    // A continuous factor runs through the mixture histogram.
    const auto cp2 = make_cross_density(0, 0);
    CHECK(std::abs(cp2->integral() - 1.0) < 1e-6);
    const auto mixed =
        product_density(cp2, 4, make_atom_density(0.0), 1, McConfig{128, 120000, 17});
    CHECK(mixed->integral() == doctest::Approx(1.0).epsilon(1e-6));

    // Normalization of continuous inputs is enforced.
    class Unnormalized final : public SectionalDensity {
    public:
        std::pair<double, double> support() const override { return {0.0, 1.0}; }
        double eval(double) const override { return 2.0; }
        double sample(Rng& rng) const override { return rng.uniform01(); }
    };
    CHECK_THROWS_AS(
        (void)product_density(std::make_shared<Unnormalized>(), 2, s2_atom, 2, McConfig{}),
        std::invalid_argument);
}

TEST_CASE("cross densities sample their own law") {
    const auto density = make_cross_density(1, 1);
    Rng rng(314);
    double sum = 0.0;
    const int samples = 200000;
    for (int i = 0; i < samples; ++i) sum += density->sample(rng);
    const double exact = to_double(cross_moment(1, 1, 1));
    CHECK(sum / samples == doctest::Approx(exact).epsilon(5e-3));
}
