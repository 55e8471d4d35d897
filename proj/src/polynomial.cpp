#include "curvmo/polynomial.hpp"

#include <numeric>
#include <stdexcept>

namespace curvmo {

int total_degree(const MultiIndex& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

Polynomial::Polynomial(int dimension) : dim_(dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial: dimension must be positive");
}

Polynomial Polynomial::constant(int dimension, Rational value) {
    Polynomial p(dimension);
    p.add_term(MultiIndex(dimension, 0), value);
    return p;
}

Polynomial Polynomial::monomial(int dimension, MultiIndex exponents, Rational coefficient) {
    if (static_cast<int>(exponents.size()) != dimension)
        throw std::invalid_argument("polynomial: exponent vector length != dimension");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("polynomial: negative exponent");
    Polynomial p(dimension);
    p.add_term(exponents, coefficient);
    return p;
}

Polynomial Polynomial::variable(int dimension, int index) {
    if (index < 0 || index >= dimension)
        throw std::invalid_argument("polynomial: variable index out of range");
    MultiIndex e(dimension, 0);
    e[index] = 1;
    return monomial(dimension, std::move(e), Rational(1));
}

Polynomial Polynomial::norm_squared(int dimension) {
    Polynomial p(dimension);
    MultiIndex e(dimension, 0);
    for (int i = 0; i < dimension; ++i) {
        e[i] = 2;
        p.add_term(e, Rational(1));
        e[i] = 0;
    }
    return p;
}

int Polynomial::degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, total_degree(e));
    return deg;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) return -1;
    int deg = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) deg = std::min(deg, total_degree(e));
    return deg;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int deg = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != deg) return false;
    return true;
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::eval_at_zero() const { return coefficient(MultiIndex(dim_, 0)); }

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("polynomial: evaluation point has wrong length");
    Rational result(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < dim_; ++i)
            if (e[i] > 0) term *= rat_pow(point[i], e[i]);
        result += term;
    }
    return result;
}

double Polynomial::eval_double(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("polynomial: evaluation point has wrong length");
    double result = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (int i = 0; i < dim_; ++i)
            for (int r = 0; r < e[i]; ++r) term *= point[i];
        result += term;
    }
    return result;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
    Polynomial part(dim_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == degree) part.terms_.emplace(e, c);
    return part;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial result(dim_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= max_degree) result.terms_.emplace(e, c);
    return result;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("polynomial: dimension mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(Polynomial poly, const Rational& scalar) { return poly *= scalar; }
Polynomial operator*(const Rational& scalar, Polynomial poly) { return poly *= scalar; }
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) { return mul(lhs, rhs); }

Polynomial mul(const Polynomial& lhs, const Polynomial& rhs, std::optional<int> max_degree) {
    if (lhs.dimension() != rhs.dimension())
        throw std::invalid_argument("polynomial: dimension mismatch");
    Polynomial result(lhs.dimension());
    const int dim = lhs.dimension();
    MultiIndex key(dim, 0);
    for (const auto& [ea, ca] : lhs.terms()) {
        const int deg_a = total_degree(ea);
        if (max_degree && deg_a > *max_degree) continue;
        for (const auto& [eb, cb] : rhs.terms()) {
            if (max_degree && deg_a + total_degree(eb) > *max_degree) continue;
            for (int i = 0; i < dim; ++i) key[i] = ea[i] + eb[i];
            result.add_term(key, ca * cb);
        }
    }
    return result;
}

Polynomial laplacian(const Polynomial& poly) {
    Polynomial result(poly.dimension());
    const int dim = poly.dimension();
    MultiIndex key(dim, 0);
    for (const auto& [e, c] : poly.terms()) {
        for (int i = 0; i < dim; ++i) {
            if (e[i] < 2) continue;
            key = e;
            key[i] -= 2;
            result.add_term(key, c * e[i] * (e[i] - 1));
        }
    }
    return result;
}

Polynomial laplacian_power(const Polynomial& poly, int k) {
    Polynomial result = poly;
    for (int i = 0; i < k; ++i) result = laplacian(result);
    return result;
}

Polynomial exp_truncated(const Polynomial& poly, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("exp_truncated: negative degree bound");
    if (poly.eval_at_zero() != 0)
        throw std::invalid_argument("exp_truncated: nonzero constant term");
    Polynomial result = Polynomial::constant(poly.dimension(), Rational(1));
    Polynomial term = result;  // p^j / j!, built incrementally
    // p^j has minimal degree >= j, so powers stop contributing once truncation
    // empties them; j <= max_degree always suffices.
    for (int j = 1; j <= max_degree; ++j) {
        term = mul(term, poly, max_degree);
        term *= Rational(1, j);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

}  // namespace curvmo
