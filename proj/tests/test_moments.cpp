#include "curvmo/moments.hpp"

#include "curvmo/rng.hpp"

#include <doctest.h>

namespace {

using namespace curvmo;

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

TEST_CASE("space forms have constant moments") {
    for (int m = 2; m <= 5; ++m) {
        const auto moments = moment_sequence(make_constant_curvature(m, Rational(1)), 3);
        for (const auto& value : moments.values) CHECK(value == 1);
    }
}

TEST_CASE("complex projective plane moments") {
    const auto cp2 = make_cpn(2, Rational(24));
    CHECK(psi(cp2, 1) == 2);
    CHECK(psi(cp2, 2) == make_rational(24, 5));
}

TEST_CASE("first moment is the normalized scalar curvature") {
    for (std::uint64_t seed : {3ULL, 14ULL, 159ULL}) {
        for (int m = 2; m <= 4; ++m) {
            const auto tensor = random_tensor(m, seed, 5);
            CHECK(psi(tensor, 1) == scalar_curvature(tensor) / Rational(m * (m - 1)));
        }
    }
}

TEST_CASE("moment order is bounded by the degree budget") {
    const auto s2 = make_constant_curvature(2, Rational(1));
    CHECK_THROWS_AS((void)psi(s2, kDefaultDegreeBudget + 1), std::invalid_argument);
    CHECK(psi(s2, 2, 2) == 1);
    CHECK_THROWS_AS((void)psi(s2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)moment_sequence(make_zero(1), 1), std::invalid_argument);
}

TEST_CASE("spectrum route matches the tensor route") {
    CHECK(psi_from_spectrum(make_op2_spectrum(), 1) == make_rational(12, 5));
    CHECK(psi_from_spectrum(make_cpn_spectrum(2), 2) == make_rational(24, 5));
    for (int k = 0; k <= 5; ++k) CHECK(psi_from_spectrum(make_sphere_spectrum(6), k) == 1);

    const auto cp2 = make_cpn(2, Rational(24));
    const auto hp2 = make_hpn(2, Rational(128));
    for (int k = 0; k <= 4; ++k) {
        CHECK(psi(cp2, k) == psi_from_spectrum(make_cpn_spectrum(2), k));
        CHECK(psi(hp2, k) == psi_from_spectrum(make_hpn_spectrum(2), k));
    }

    // Non-normalized scalar curvature scales the spectrum linearly.
    const auto cp2_double = make_cpn(2, Rational(48));
    const JacobiSpectrumModel scaled{{{Rational(0), 1}, {Rational(8), 1}, {Rational(2), 2}}};
    for (int k = 0; k <= 3; ++k) CHECK(psi(cp2_double, k) == psi_from_spectrum(scaled, k));
}

TEST_CASE("moments are homogeneous in the tensor") {
    const auto tensor = random_tensor(3, 8, 4);
    const Rational c = make_rational(-5, 3);
    const auto scaled = scale(tensor, c);
    for (int k = 0; k <= 3; ++k) CHECK(psi(scaled, k) == rat_pow(c, k) * psi(tensor, k));
}

TEST_CASE("second moment dominates the squared mean") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const int m = 2 + static_cast<int>(seed % 4);
        const auto tensor = random_tensor(m, seed, 6);
        const auto moments = moment_sequence(tensor, 2);
        CHECK(moments.values[2] >= moments.values[1] * moments.values[1]);
    }
}

TEST_CASE("in dimension two the sectional curvature is deterministic") {
    for (std::uint64_t seed : {5ULL, 6ULL, 7ULL}) {
        const auto tensor = random_tensor(2, seed, 9);
        const auto moments = moment_sequence(tensor, 4);
        for (int k = 0; k <= 4; ++k)
            CHECK(moments.values[k] == rat_pow(moments.values[1], k));

        // The single moment equals the curvature of the unique 2-plane.
        const TwoPlaneSpan plane{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
        CHECK(moments.values[1] == sectional_curvature(tensor, plane));
    }
}

TEST_CASE("gaussian averages of polynomials") {
    CHECK(gaussian_integrate(Polynomial::monomial(1, {2}, Rational(1))) == 1);
    CHECK(gaussian_integrate(Polynomial::monomial(1, {4}, Rational(1))) == 3);
    CHECK(gaussian_integrate(Polynomial::monomial(2, {3, 2}, Rational(5))) == 0);
}

TEST_CASE("sphere averages of polynomials") {
    const Polynomial norm_sq = Polynomial::norm_squared(4);
    CHECK(sphere_integrate(norm_sq * norm_sq * norm_sq) == 1);
    CHECK(sphere_integrate(Polynomial::monomial(3, {2, 0, 0}, Rational(1))) ==
          make_rational(1, 3));
    CHECK(sphere_integrate(Polynomial::variable(5, 0)) == 0);
    CHECK_THROWS_AS(
        (void)sphere_integrate(Polynomial::constant(2, Rational(1)) + Polynomial::variable(2, 0)),
        std::invalid_argument);
}

TEST_CASE("gaussian and sphere averages differ by the radial factor") {
    Rng rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 5));
        const int kappa = static_cast<int>(rng.uniform_int(0, 3));
        const Polynomial p = random_homogeneous(rng, m, 2 * kappa, 5);
        const Rational factor = rat_pow(Rational(2), kappa) *
                                falling_factorial(Rational(m, 2) + (kappa - 1), kappa);
        CHECK(gaussian_integrate(p) == factor * sphere_integrate(p));
    }
}

TEST_CASE("determinant generating identity witness") {
    const DoubleMatrix zero(3, std::vector<double>(3, 0.0));
    const auto [series_zero, closed_zero] = det_generating_check(zero, 0.7);
    CHECK(series_zero == doctest::Approx(1.0));
    CHECK(closed_zero == doctest::Approx(1.0));

    for (int m : {2, 5}) {
        DoubleMatrix quarter(m, std::vector<double>(m, 0.0));
        for (int i = 0; i < m; ++i) quarter[i][i] = 0.25;
        const auto [series, closed] = det_generating_check(quarter, 0.5);
        const double expected = std::pow(0.75, -m / 2.0);
        CHECK(series == doctest::Approx(expected).epsilon(1e-12));
        CHECK(closed == doctest::Approx(expected).epsilon(1e-12));
    }

    Rng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.uniform_int(2, 6));
        DoubleMatrix f(m, std::vector<double>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) f[i][j] = f[j][i] = rng.normal();
        double radius = 0.0;
        for (double lambda : symmetric_eigenvalues(f))
            radius = std::max(radius, std::abs(lambda));
        for (auto& row : f)
            for (double& entry : row) entry *= 0.3 / radius;  // spectral radius 0.3
        const auto [series, closed] = det_generating_check(f, 0.5);
        CHECK(series == doctest::Approx(closed).epsilon(1e-12));
    }

    DoubleMatrix identity(2, std::vector<double>(2, 0.0));
    identity[0][0] = identity[1][1] = 1.0;
    CHECK_THROWS_AS((void)det_generating_check(identity, 0.5), std::domain_error);
}

TEST_CASE("sup estimate from the even moment tail") {
    const auto sphere_moments = moment_sequence(make_constant_curvature(3, Rational(1)), 4);
    CHECK(sup_sec_estimate(sphere_moments).estimate == doctest::Approx(1.0));

    // For the normalized complex projective plane the tail climbs toward 4.
    MomentSequence cp2;
    cp2.dimension = 4;
    for (int k = 0; k <= 12; ++k)
        cp2.values.push_back(psi_from_spectrum(make_cpn_spectrum(2), k));
    const auto estimate = sup_sec_estimate(cp2);
    CHECK(estimate.estimate > 2.8);
    CHECK(estimate.estimate <= 4.0);
    for (std::size_t i = 1; i < estimate.roots.size(); ++i)
        CHECK(estimate.roots[i] >= estimate.roots[i - 1]);

    const auto flat = moment_sequence(make_zero(3), 4);
    CHECK(sup_sec_estimate(flat).estimate == doctest::Approx(0.0));

    // Power-mean growth of even moments holds for arbitrary tensors too.
    const auto random_roots = sup_sec_estimate(moment_sequence(random_tensor(3, 2024, 6), 6));
    for (std::size_t i = 1; i < random_roots.roots.size(); ++i)
        CHECK(random_roots.roots[i] >= random_roots.roots[i - 1] - 1e-12);

    MomentSequence too_short;
    too_short.dimension = 3;
    too_short.values = {Rational(1), Rational(1)};
    CHECK_THROWS_AS((void)sup_sec_estimate(too_short), std::invalid_argument);
}

TEST_CASE("reference volumes") {
    const double pi = std::numbers::pi;
    CHECK(volumes(2).grassmannian == doctest::Approx(1.0));
    CHECK(volumes(3).sphere == doctest::Approx(4.0 * pi));
    CHECK(volumes(4).stiefel == doctest::Approx(8.0 * pi * pi * pi));
    for (int m = 2; m <= 8; ++m) {
        const auto v = volumes(m);
        CHECK(v.grassmannian == doctest::Approx(v.stiefel / (4.0 * pi)));
    }
    CHECK_THROWS_AS((void)volumes(1), std::invalid_argument);
}
