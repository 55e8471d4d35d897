#pragma once

#include "curvmo/moments.hpp"
#include "curvmo/rational.hpp"
#include "curvmo/rng.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace curvmo {

/// k-th moment of the two-parameter measure family on [1, 4] whose members
/// are the sectional-curvature distributions of the rank-one model spaces:
/// sum_r 4^r C(-(2a+1)/2, r) C(-(2b+2)/2, k-r) / C(-(2a+2b+3)/2, k).
/// Parameters: complex projective (0, n-2), quaternionic (1, 2n-3),
/// octonionic plane (3, 3).
Rational cross_moment(int a, int b, int k);

/// Normalizing prefactor (2a+1)/6 * C(a+b+1/2, b) of the density
/// ((s-1)/3)^((2a-1)/2) ((4-s)/3)^b on [1, 4].
Rational cross_prefactor(int a, int b);

/// Pointwise density; s in (1, 4] (a = 0 is singular at s = 1).
double cross_density_eval(int a, int b, double s);

/// k-th moment by adaptive quadrature after the substitution s = 1 + 3u^2,
/// which removes the endpoint singularity.
double cross_density_moment_quadrature(int a, int b, int k);

/// Moment combinator for a Riemannian product from factor moments:
/// sum_r C(k,r) [m+2r-2]_{2r} [n+2(k-r)-2]_{2(k-r)} / [m+n+2k-2]_{2k}
///   * left[r] * right[k-r].
/// Factor dimensions >= 1; for a 1-dimensional factor every r >= 1 term
/// vanishes through the falling factorial.
Rational product_moment(const MomentSequence& left, int m, const MomentSequence& right, int n,
                        int k);

/// Exact k-th moment of the real 2-plane Grassmannian of R^n (n >= 4),
/// normalized so the sectional curvature lies in [0, 2].
Rational gr2rn_moment(int n, int k);

/// Integral of x_0^{k_0} ... x_n^{k_n} over the standard n-simplex with
/// x_0 = 1 - x_1 - ... - x_n:  k_0! ... k_n! / (n + sum k_i)!.
Rational simplex_integral(const std::vector<int>& exponents);

/// Pushforward kernel of the simplex law: the distribution of
/// x^2 mu + y^2 nu under the density proportional to x^(m-2) y^(n-2) on the
/// 2-simplex. Convolution kernel for sectional-curvature densities of
/// products of m- and n-dimensional factors.
struct ProductKernel {
    int m = 2;
    int n = 2;
    double mu = 0.0;
    double nu = 0.0;
};

/// Sampling/binning budget for density paths without a closed form.
struct McConfig {
    int bins = 512;
    long samples = 200000;
    std::uint64_t seed = 1;
};

/// Probability density of the sectional curvature of a model, exposing
/// pointwise evaluation, support, and exact sampling. Space forms are
/// atomic (a Dirac mass) and have no pointwise density.
class SectionalDensity {
public:
    virtual ~SectionalDensity() = default;

    virtual std::pair<double, double> support() const = 0;
    virtual bool is_atomic() const { return false; }
    virtual double atom_value() const;
    virtual double eval(double s) const = 0;
    virtual double sample(Rng& rng) const = 0;
    /// Integral of the density over its support (1 for atoms).
    virtual double integral() const;
};

using DensityPtr = std::shared_ptr<const SectionalDensity>;

DensityPtr make_atom_density(double value);
DensityPtr make_cross_density(int a, int b);
DensityPtr make_kernel_density(const ProductKernel& kernel, const McConfig& config = {});

/// Kernel density at one point; closed form when mu * nu = 0, binned Monte
/// Carlo pushforward otherwise. Prefer make_kernel_density for repeated
/// evaluation (the histogram is built once per density object).
double product_kernel_density(const ProductKernel& kernel, double s,
                              const McConfig& config = {});

/// Density of the sectional curvature of a Riemannian product with factor
/// densities `left` (dimension m) and `right` (dimension n). Two atoms
/// compose exactly into one kernel; any continuous factor is handled by a
/// Monte Carlo mixture histogram. Throws when a continuous input fails to
/// integrate to 1 within 1e-6.
DensityPtr product_density(const DensityPtr& left, int m, const DensityPtr& right, int n,
                           const McConfig& config = {});

/// Adaptive Simpson quadrature to the given tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-12);

}  // namespace curvmo
