#pragma once

#include "curvmo/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace curvmo {

/// Exponent vector of a monomial; length equals the ambient dimension.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& exponents);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms with zero coefficient are never stored.
class Polynomial {
public:
    explicit Polynomial(int dimension);

    static Polynomial constant(int dimension, Rational value);
    static Polynomial monomial(int dimension, MultiIndex exponents, Rational coefficient);
    static Polynomial variable(int dimension, int index);
    /// x_1^2 + ... + x_m^2.
    static Polynomial norm_squared(int dimension);

    int dimension() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MultiIndex, Rational>& terms() const { return terms_; }

    /// Maximal total degree; -1 for the zero polynomial.
    int degree() const;
    /// Minimal total degree over stored terms; -1 for the zero polynomial.
    int min_degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const MultiIndex& exponents) const;
    Rational eval_at_zero() const;
    Rational eval(std::span<const Rational> point) const;
    double eval_double(std::span<const double> point) const;

    Polynomial homogeneous_part(int degree) const;
    Polynomial truncated(int max_degree) const;

    /// Accumulates coefficient into the term, erasing it if the sum is zero.
    void add_term(const MultiIndex& exponents, const Rational& coefficient);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);
    bool operator==(const Polynomial& other) const = default;

private:
    int dim_;
    std::map<MultiIndex, Rational> terms_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial poly, const Rational& scalar);
Polynomial operator*(const Rational& scalar, Polynomial poly);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

/// Product with every term of total degree > max_degree discarded.
Polynomial mul(const Polynomial& lhs, const Polynomial& rhs,
               std::optional<int> max_degree = std::nullopt);

/// Sum of second coordinate derivatives, sum_i d^2 p / dx_i^2.
/// Degree drops by two; linear in p.
Polynomial laplacian(const Polynomial& poly);
Polynomial laplacian_power(const Polynomial& poly, int k);

/// Truncated exponential series sum_j p^j / j! with all products cut at
/// max_degree. Requires a vanishing constant term.
Polynomial exp_truncated(const Polynomial& poly, int max_degree);

}  // namespace curvmo
