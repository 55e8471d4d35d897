#pragma once

#include "curvmo/polynomial.hpp"
#include "curvmo/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curvmo {

/// Algebraic curvature tensor on an m-dimensional euclidean space, stored as
/// the full component array R(i,j,k,l) = g(R_{e_i,e_j} e_k, e_l) in a fixed
/// orthonormal basis. Conventions are pinned so that the unit sphere tensor
/// has sectional curvature +1 and Ricci (m-1)*id.
class CurvatureTensor {
public:
    /// Zero tensor; dimension >= 1 (dimension 1 only ever stays zero).
    explicit CurvatureTensor(int dimension);

    int dimension() const { return dim_; }

    const Rational& operator()(int i, int j, int k, int l) const {
        return comp_[index(i, j, k, l)];
    }
    void set(int i, int j, int k, int l, Rational value) {
        comp_[index(i, j, k, l)] = std::move(value);
    }

    /// Row-major components, index ((i*m + j)*m + k)*m + l.
    const std::vector<Rational>& components() const { return comp_; }

    bool operator==(const CurvatureTensor& other) const = default;

private:
    std::size_t index(int i, int j, int k, int l) const {
        return ((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l;
    }

    int dim_;
    std::vector<Rational> comp_;
};

CurvatureTensor make_zero(int m);

/// Space form of sectional curvature c; m >= 2.
CurvatureTensor make_constant_curvature(int m, const Rational& c);

/// Complex projective space tensor on R^{2n} with the complex structure
/// I e_{2i} = e_{2i+1}; scalar curvature kappa. For kappa = 4n(n+1) the
/// Jacobi eigenvalues at unit X are 0, 4, 1 with multiplicities 1, 1, 2n-2.
CurvatureTensor make_cpn(int n, const Rational& kappa);

/// Quaternionic projective space tensor on R^{4n} (structures I, J, K given
/// by left quaternion multiplication); scalar curvature kappa. For
/// kappa = 16n(n+2) the Jacobi eigenvalues at unit X are 0, 4, 1 with
/// multiplicities 1, 3, 4n-4.
CurvatureTensor make_hpn(int n, const Rational& kappa);

/// Block-diagonal tensor of a Riemannian product; mixed components vanish.
CurvatureTensor direct_sum(const CurvatureTensor& a, const CurvatureTensor& b);

CurvatureTensor scale(const CurvatureTensor& tensor, const Rational& factor);

/// Projects an arbitrary 4-index array (size m^4, row-major) onto the
/// curvature symmetries: antisymmetrize both pairs, symmetrize the pair
/// exchange, then remove the cyclic (Bianchi) component. Idempotent.
CurvatureTensor project_to_curvature(int m, const std::vector<Rational>& raw);

/// Seed-deterministic valid tensor with entries of size ~magnitude before
/// projection; magnitude 0 gives the zero tensor.
CurvatureTensor random_tensor(int m, std::uint64_t seed, int magnitude);

/// Empty iff antisymmetry in (i,j) and (k,l), pair-exchange symmetry and the
/// first Bianchi identity all hold exactly.
std::vector<std::string> validate(const CurvatureTensor& tensor);

struct TwoPlaneSpan {
    std::vector<Rational> x;
    std::vector<Rational> y;
};

/// g(X,X) g(Y,Y) - g(X,Y)^2; positive iff the span is a genuine 2-plane.
Rational gram_determinant(const TwoPlaneSpan& plane);

/// g(R_{Y,X} X, Y) normalized by the Gram determinant; independent of the
/// choice of spanning pair. Throws on a degenerate span or invalid tensor.
Rational sectional_curvature(const CurvatureTensor& tensor, const TwoPlaneSpan& plane);

/// Matrix of the Jacobi operator Y -> R_{Y,X} X with entries as degree-2
/// polynomials in the coordinates of X; entry (a,b) = sum R(a,i,j,b) x_i x_j.
std::vector<std::vector<Polynomial>> jacobi_matrix(const CurvatureTensor& tensor);

/// The Jacobi matrix evaluated at a numeric direction X.
std::vector<std::vector<Rational>> jacobi_matrix_at(const CurvatureTensor& tensor,
                                                    std::span<const Rational> x);

/// Ric(a,b) = sum_mu R(mu,a,b,mu); sphere(m,1) gives (m-1)*id.
std::vector<std::vector<Rational>> ricci(const CurvatureTensor& tensor);
Rational scalar_curvature(const CurvatureTensor& tensor);

/// Squared norm of the trace-free Ricci tensor in the half-normalized
/// metric on symmetric 2-forms: |Ric|^2 - kappa^2 / (2m) with
/// |h|^2 = (1/2) sum h(e_i,e_j)^2. Vanishes exactly on Einstein tensors.
Rational ric0_norm_sq(const CurvatureTensor& tensor);

/// Jacobi operator spectrum of a rank-one model: eigenvalue scale * g(X,X)
/// with the given multiplicity, one pair per eigenvalue. Total multiplicity
/// is the dimension; the kernel pair (0,1) is always present.
struct JacobiSpectrumModel {
    std::vector<std::pair<Rational, int>> pairs;

    int dimension() const {
        int m = 0;
        for (const auto& [scale, mult] : pairs) m += mult;
        return m;
    }
};

JacobiSpectrumModel make_sphere_spectrum(int m);
JacobiSpectrumModel make_cpn_spectrum(int n);
JacobiSpectrumModel make_hpn_spectrum(int n);
/// Eigenvalues 0, 4, 1 with multiplicities 1, 7, 8 in dimension 16.
JacobiSpectrumModel make_op2_spectrum();

/// JSON document {"schema_version", "dimension", "components"} with the
/// components as row-major "p/q" strings.
std::string tensor_to_json(const CurvatureTensor& tensor);
CurvatureTensor tensor_from_json(const std::string& text);

}  // namespace curvmo
