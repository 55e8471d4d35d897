#pragma once

#include "curvmo/curvature.hpp"
#include "curvmo/polynomial.hpp"
#include "curvmo/rational.hpp"

#include <utility>
#include <vector>

namespace curvmo {

/// Default bound on the moment order of the exact tensor path; each order k
/// costs polynomial arithmetic up to total degree 2k.
inline constexpr int kDefaultDegreeBudget = 6;

/// Exact sectional-curvature moments E[sec^k], k = 0..K, of one tensor.
/// values[0] is always 1.
struct MomentSequence {
    int dimension = 0;
    std::vector<Rational> values;
};

/// Moments of a constant sectional-curvature value (space forms and flat
/// factors): values[k] = c^k.
MomentSequence make_constant_moments(int dimension, const Rational& sec_value, int k_max);

/// k-th moment of the sectional curvature of R over the Grassmannian of
/// 2-planes: apply the k-th power of the coordinate Laplacian at 0 to
/// exp(sum_r tr(J_X^r)/(2r)) and divide by [m+2k-2]_{2k}, where J_X is the
/// Jacobi operator of R. Exact; throws when k exceeds the degree budget.
Rational psi(const CurvatureTensor& tensor, int k, int degree_budget = kDefaultDegreeBudget);

/// psi for k = 0..k_max computed from a single truncated generating series.
MomentSequence moment_sequence(const CurvatureTensor& tensor, int k_max,
                               int degree_budget = kDefaultDegreeBudget);

/// Fast exact path for tensors whose Jacobi spectrum at X scales with
/// g(X,X): expands prod_i (1 - lambda_i u)^{-mult_i/2} to order k and
/// normalizes the u^k coefficient. Agrees with psi on any realizing tensor.
Rational psi_from_spectrum(const JacobiSpectrumModel& model, int k);

/// Integral of p against the standard Gaussian probability density,
/// sum_j laplacian^j(p)(0) / (2^j j!). Exact.
Rational gaussian_integrate(const Polynomial& poly);

/// Average of a homogeneous polynomial over the unit sphere; zero for odd
/// degree. Throws on non-homogeneous input.
Rational sphere_integrate(const Polynomial& poly);

/// Square dense float matrix as nested rows.
using DoubleMatrix = std::vector<std::vector<double>>;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations (unsorted).
std::vector<double> symmetric_eigenvalues(DoubleMatrix matrix);

/// Numerical witness for the log-determinant expansion: returns the pair
/// (exp(sum_r (2t)^r tr(F^r) / (2r)), det(I - 2tF)^{-1/2}) for a symmetric
/// matrix F. The series side walks actual matrix powers; the closed side
/// uses the eigenvalues. Throws when the spectral radius of 2tF reaches 1.
std::pair<double, double> det_generating_check(const DoubleMatrix& f, double t);

struct SupSecEstimate {
    double estimate = 0.0;             ///< values[K]^(1/K) for the top even K
    std::vector<double> roots;         ///< values[2j]^(1/2j), j = 1..K/2
};

/// Lower estimate of max |sec| from the even-moment tail.
SupSecEstimate sup_sec_estimate(const MomentSequence& moments);

struct SpaceVolumes {
    double sphere = 0.0;        ///< unit sphere in dimension m
    double stiefel = 0.0;       ///< orthonormal 2-frames, 2^m pi^(m-1) / (m-2)!
    double grassmannian = 0.0;  ///< 2-planes, (2 pi)^(m-2) / (m-2)!
};

SpaceVolumes volumes(int m);

}  // namespace curvmo
