#include "curvmo/moments.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace curvmo {

namespace {

/// tr(J^r) for r = 1..k. Full matrix powers are formed only up to
/// ceil(k/2); higher traces come from tr(J^r) = <J^a, (J^b)^T> with
/// a + b = r, which skips the most expensive products.
std::vector<Polynomial> jacobi_trace_powers(const std::vector<std::vector<Polynomial>>& jacobi,
                                            int k) {
    const int m = static_cast<int>(jacobi.size());
    const int dim = jacobi[0][0].dimension();
    const auto matrix_mul = [&](const std::vector<std::vector<Polynomial>>& a,
                                const std::vector<std::vector<Polynomial>>& b) {
        std::vector<std::vector<Polynomial>> c(m, std::vector<Polynomial>(m, Polynomial(dim)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int s = 0; s < m; ++s)
                    if (!a[i][s].is_zero() && !b[s][j].is_zero()) c[i][j] += a[i][s] * b[s][j];
        return c;
    };
    const auto trace_of_product = [&](const std::vector<std::vector<Polynomial>>& a,
                                      const std::vector<std::vector<Polynomial>>& b) {
        Polynomial tr(dim);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!a[i][j].is_zero() && !b[j][i].is_zero()) tr += a[i][j] * b[j][i];
        return tr;
    };

    std::vector<std::vector<std::vector<Polynomial>>> powers;  // powers[r-1] = J^r
    powers.push_back(jacobi);
    const int half = (k + 1) / 2;
    for (int r = 2; r <= half; ++r) powers.push_back(matrix_mul(powers.back(), jacobi));

    std::vector<Polynomial> traces;
    traces.reserve(k);
    for (int r = 1; r <= k; ++r) {
        if (r <= half) {
            Polynomial tr(dim);
            for (int i = 0; i < m; ++i) tr += powers[r - 1][i][i];
            traces.push_back(std::move(tr));
        } else {
            const int a = half;
            const int b = r - half;
            traces.push_back(trace_of_product(powers[a - 1], powers[b - 1]));
        }
    }
    return traces;
}

/// exp(sum_{r=1..k} tr(J^r)/(2r)) truncated at total degree 2k. Only the
/// degree-2k part matters for the k-th moment; lower parts serve lower k.
Polynomial generating_series(const CurvatureTensor& tensor, int k) {
    const auto jacobi = jacobi_matrix(tensor);
    const auto traces = jacobi_trace_powers(jacobi, k);
    Polynomial argument(tensor.dimension());
    for (int r = 1; r <= k; ++r) argument += traces[r - 1] * Rational(1, 2 * r);
    return exp_truncated(argument, 2 * k);
}

Rational moment_from_series(const Polynomial& series, int m, int k) {
    const Polynomial part = series.homogeneous_part(2 * k);
    const Rational numerator = laplacian_power(part, k).eval_at_zero();
    return numerator / falling_factorial(Rational(m + 2 * k - 2), 2 * k);
}

void check_moment_args(int m, int k, int degree_budget) {
    if (m < 2) throw std::invalid_argument("moments: dimension must be at least 2");
    if (k < 0) throw std::invalid_argument("moments: negative order");
    if (k > degree_budget) {
        std::ostringstream msg;
        msg << "moments: order " << k << " needs degree " << 2 * k
            << ", beyond the configured budget " << 2 * degree_budget;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

MomentSequence make_constant_moments(int dimension, const Rational& sec_value, int k_max) {
    MomentSequence seq;
    seq.dimension = dimension;
    seq.values.reserve(k_max + 1);
    for (int k = 0; k <= k_max; ++k) seq.values.push_back(rat_pow(sec_value, k));
    return seq;
}

Rational psi(const CurvatureTensor& tensor, int k, int degree_budget) {
    check_moment_args(tensor.dimension(), k, degree_budget);
    if (k == 0) return Rational(1);
    return moment_from_series(generating_series(tensor, k), tensor.dimension(), k);
}

MomentSequence moment_sequence(const CurvatureTensor& tensor, int k_max, int degree_budget) {
    check_moment_args(tensor.dimension(), k_max, degree_budget);
    MomentSequence seq;
    seq.dimension = tensor.dimension();
    seq.values.reserve(k_max + 1);
    seq.values.emplace_back(1);
    if (k_max == 0) return seq;
    const Polynomial series = generating_series(tensor, k_max);
    for (int k = 1; k <= k_max; ++k)
        seq.values.push_back(moment_from_series(series, tensor.dimension(), k));
    return seq;
}

Rational psi_from_spectrum(const JacobiSpectrumModel& model, int k) {
    const int m = model.dimension();
    if (m < 2) throw std::invalid_argument("spectrum moments: total multiplicity must be >= 2");
    if (k < 0) throw std::invalid_argument("spectrum moments: negative order");

    // u^k coefficient of prod_i (1 - lambda_i u)^(-mult_i/2), by convolving
    // the Newton binomial series of the factors.
    std::vector<Rational> coeff(k + 1, Rational(0));
    coeff[0] = 1;
    for (const auto& [lambda, mult] : model.pairs) {
        if (lambda == 0) continue;
        std::vector<Rational> factor(k + 1);
        const Rational exponent = Rational(-mult, 2);
        for (int j = 0; j <= k; ++j)
            factor[j] = gen_binomial(exponent, j) * rat_pow(-lambda, j);
        std::vector<Rational> next(k + 1, Rational(0));
        for (int a = 0; a <= k; ++a) {
            if (coeff[a] == 0) continue;
            for (int b = 0; a + b <= k; ++b) next[a + b] += coeff[a] * factor[b];
        }
        coeff.swap(next);
    }

    const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    return coeff[k] * sign / gen_binomial(Rational(-(m - 1), 2), k);
}

Rational gaussian_integrate(const Polynomial& poly) {
    Rational result(0);
    Polynomial current = poly;
    Rational weight(1);  // 1 / (2^j j!)
    for (int j = 0; !current.is_zero(); ++j) {
        if (j > 0) weight /= Rational(2 * j);
        result += weight * current.eval_at_zero();
        current = laplacian(current);
    }
    return result;
}

Rational sphere_integrate(const Polynomial& poly) {
    if (!poly.is_homogeneous())
        throw std::invalid_argument("sphere average: polynomial must be homogeneous");
    if (poly.is_zero()) return Rational(0);
    const int degree = poly.degree();
    if (degree % 2 == 1) return Rational(0);
    const int kappa = degree / 2;
    const int m = poly.dimension();
    const Rational numerator = laplacian_power(poly, kappa).eval_at_zero();
    const Rational denom = rat_pow(Rational(4), kappa) * Rational(factorial(kappa)) *
                           falling_factorial(Rational(m, 2) + (kappa - 1), kappa);
    return numerator / denom;
}

std::vector<double> symmetric_eigenvalues(DoubleMatrix matrix) {
    const auto n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n)
            throw std::invalid_argument("eigenvalues: matrix must be square");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off_diagonal = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off_diagonal += matrix[p][q] * matrix[p][q];
        if (off_diagonal < 1e-28) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(matrix[p][q]) < 1e-300) continue;
                const double theta =
                    0.5 * std::atan2(2.0 * matrix[p][q], matrix[q][q] - matrix[p][p]);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (std::size_t i = 0; i < n; ++i) {
                    const double a_ip = matrix[i][p];
                    const double a_iq = matrix[i][q];
                    matrix[i][p] = c * a_ip - s * a_iq;
                    matrix[i][q] = s * a_ip + c * a_iq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double a_pi = matrix[p][i];
                    const double a_qi = matrix[q][i];
                    matrix[p][i] = c * a_pi - s * a_qi;
                    matrix[q][i] = s * a_pi + c * a_qi;
                }
            }
    }
    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = matrix[i][i];
    return eigenvalues;
}

std::pair<double, double> det_generating_check(const DoubleMatrix& f, double t) {
    const auto m = f.size();
    for (const auto& row : f)
        if (row.size() != m) throw std::invalid_argument("det check: matrix must be square");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (std::abs(f[i][j] - f[j][i]) > 1e-12)
                throw std::invalid_argument("det check: matrix must be symmetric");

    const auto eigenvalues = symmetric_eigenvalues(f);
    double radius = 0.0;
    for (double lambda : eigenvalues) radius = std::max(radius, std::abs(lambda));
    if (2.0 * std::abs(t) * radius >= 1.0)
        throw std::domain_error("det check: spectral radius of 2tF is not below 1");

    double series_sum = 0.0;
    DoubleMatrix power(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) power[i][i] = 1.0;
    double scale = 1.0;
    for (int r = 1; r <= 10000; ++r) {
        DoubleMatrix next(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t j = 0; j < m; ++j) next[i][j] += power[i][s] * f[s][j];
        power.swap(next);
        scale *= 2.0 * t;
        double trace = 0.0;
        for (std::size_t i = 0; i < m; ++i) trace += power[i][i];
        const double term = scale * trace / (2.0 * r);
        series_sum += term;
        if (std::abs(term) < 1e-16) break;
    }

    double determinant = 1.0;
    for (double lambda : eigenvalues) determinant *= 1.0 - 2.0 * t * lambda;
    return {std::exp(series_sum), 1.0 / std::sqrt(determinant)};
}

SupSecEstimate sup_sec_estimate(const MomentSequence& moments) {
    const int top = static_cast<int>(moments.values.size()) - 1;
    const int even_top = top - (top % 2);
    if (even_top < 2)
        throw std::invalid_argument("sup estimate: need even moments up to order >= 2");
    SupSecEstimate result;
    for (int k = 2; k <= even_top; k += 2)
        result.roots.push_back(std::pow(to_double(moments.values[k]), 1.0 / k));
    result.estimate = result.roots.back();
    return result;
}

SpaceVolumes volumes(int m) {
    if (m < 2) throw std::invalid_argument("volumes: dimension must be at least 2");
    const auto unit_sphere = [](int dim) {
        return 2.0 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
    };
    SpaceVolumes v;
    v.sphere = unit_sphere(m);
    v.stiefel = unit_sphere(m) * unit_sphere(m - 1);
    v.grassmannian = v.stiefel / (4.0 * std::numbers::pi);
    return v;
}

}  // namespace curvmo
