#pragma once

#include "curvmo/curvature.hpp"
#include "curvmo/polynomial.hpp"
#include "curvmo/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace curvmo {

/// Empirical mean with its standard error. Estimates are reproducible: a
/// fixed seed and sample count give bit-identical results, independent of
/// how many orders are requested, via chunked accumulation with derived
/// per-chunk sub-seeds.
struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

/// Haar-uniform orthonormal 2-frame: two standard Gaussian vectors run
/// through Gram-Schmidt, resampling numerically degenerate draws.
std::pair<std::vector<double>, std::vector<double>> sample_two_frame(int m, Rng& rng);

/// Monte Carlo estimate of the k-th sectional-curvature moment: the average
/// of g(R_{Y,X} X, Y)^k over uniform orthonormal frames.
McEstimate mc_moment(const CurvatureTensor& tensor, int k, long samples, std::uint64_t seed);

/// Estimates for several orders from one shared frame stream; entry i equals
/// mc_moment(tensor, orders[i], samples, seed) bit for bit.
std::vector<McEstimate> mc_moments(const CurvatureTensor& tensor,
                                   const std::vector<int>& orders, long samples,
                                   std::uint64_t seed);

/// Average of a polynomial over the unit sphere, sampled uniformly.
McEstimate mc_sphere_poly(const Polynomial& poly, long samples, std::uint64_t seed);

/// Average of (x^2 mu + y^2 nu)^k under the 2-simplex law proportional to
/// x^(m-2) y^(n-2); m, n >= 2.
McEstimate mc_simplex(int m, int n, double mu, double nu, int k, long samples,
                      std::uint64_t seed);

}  // namespace curvmo
