#include "curvmo/mc.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace curvmo {

namespace {

constexpr long kChunkSize = 1 << 16;

/// Chunked accumulation of one scalar sample stream per order. The chunk
/// layout fixes the random stream independently of the evaluation order, so
/// the reduction is associative and agnostic to worker counts.
std::vector<McEstimate> accumulate_chunked(
    const std::vector<int>& orders, long samples, std::uint64_t seed,
    const std::function<double(Rng&)>& draw) {
    if (samples <= 0) throw std::invalid_argument("monte carlo: sample count must be positive");
    const auto n_orders = orders.size();
    std::vector<double> sum(n_orders, 0.0), sum_sq(n_orders, 0.0);

    long done = 0;
    for (std::uint64_t chunk = 0; done < samples; ++chunk) {
        Rng rng(derive_seed(seed, chunk));
        const long this_chunk = std::min(kChunkSize, samples - done);
        std::vector<double> chunk_sum(n_orders, 0.0), chunk_sum_sq(n_orders, 0.0);
        for (long i = 0; i < this_chunk; ++i) {
            const double value = draw(rng);
            for (std::size_t q = 0; q < n_orders; ++q) {
                double power = 1.0;
                for (int e = 0; e < orders[q]; ++e) power *= value;
                chunk_sum[q] += power;
                chunk_sum_sq[q] += power * power;
            }
        }
        for (std::size_t q = 0; q < n_orders; ++q) {
            sum[q] += chunk_sum[q];
            sum_sq[q] += chunk_sum_sq[q];
        }
        done += this_chunk;
    }

    std::vector<McEstimate> estimates(n_orders);
    const auto n = static_cast<double>(samples);
    for (std::size_t q = 0; q < n_orders; ++q) {
        const double mean = sum[q] / n;
        double variance = 0.0;
        if (samples > 1) variance = std::max(0.0, (sum_sq[q] - n * mean * mean) / (n - 1.0));
        estimates[q] = McEstimate{mean, std::sqrt(variance / n), samples, seed};
    }
    return estimates;
}

void fill_normal(std::vector<double>& out, Rng& rng) {
    for (double& x : out) x = rng.normal();
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> sample_two_frame(int m, Rng& rng) {
    if (m < 2) throw std::invalid_argument("two-frame sampling: dimension must be >= 2");
    std::vector<double> x(m), y(m);
    for (;;) {
        fill_normal(x, rng);
        double xx = 0.0;
        for (double v : x) xx += v * v;
        if (xx < 1e-12) continue;
        const double inv_norm = 1.0 / std::sqrt(xx);
        for (double& v : x) v *= inv_norm;

        fill_normal(y, rng);
        double xy = 0.0, yy = 0.0;
        for (int i = 0; i < m; ++i) {
            xy += x[i] * y[i];
            yy += y[i] * y[i];
        }
        const double gram = yy - xy * xy;  // Gram determinant against unit x
        if (gram < 1e-12) continue;
        const double inv_residual = 1.0 / std::sqrt(gram);
        for (int i = 0; i < m; ++i) y[i] = (y[i] - xy * x[i]) * inv_residual;
        // Second orthogonalization pass clears the cancellation error left
        // by nearly parallel draws.
        double drift = 0.0;
        for (int i = 0; i < m; ++i) drift += x[i] * y[i];
        double norm_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            y[i] -= drift * x[i];
            norm_sq += y[i] * y[i];
        }
        const double y_scale = 1.0 / std::sqrt(norm_sq);
        for (int i = 0; i < m; ++i) y[i] *= y_scale;
        return {x, y};
    }
}

McEstimate mc_moment(const CurvatureTensor& tensor, int k, long samples, std::uint64_t seed) {
    return mc_moments(tensor, {k}, samples, seed).front();
}

std::vector<McEstimate> mc_moments(const CurvatureTensor& tensor,
                                   const std::vector<int>& orders, long samples,
                                   std::uint64_t seed) {
    const auto violations = validate(tensor);
    if (!violations.empty())
        throw std::invalid_argument("monte carlo moments: invalid curvature tensor");
    for (int k : orders)
        if (k < 0) throw std::invalid_argument("monte carlo moments: negative order");

    const int m = tensor.dimension();
    // sec on a frame needs no Gram denominator; flatten the contraction
    // g(R_{Y,X}X, Y) = w^T Q v with w = Y (x) X and v = X (x) Y.
    const int mm = m * m;
    std::vector<double> q(static_cast<std::size_t>(mm) * mm);
    for (int a = 0; a < m; ++a)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int b = 0; b < m; ++b)
                    q[static_cast<std::size_t>(a * m + i) * mm + (j * m + b)] =
                        to_double(tensor(a, i, j, b));

    std::vector<double> w(mm), v(mm);
    const auto draw = [&](Rng& rng) {
        const auto [x, y] = sample_two_frame(m, rng);
        for (int a = 0; a < m; ++a)
            for (int i = 0; i < m; ++i) {
                w[a * m + i] = y[a] * x[i];
                v[i * m + a] = x[i] * y[a];
            }
        double value = 0.0;
        for (int row = 0; row < mm; ++row) {
            const double* q_row = q.data() + static_cast<std::size_t>(row) * mm;
            double inner = 0.0;
            for (int col = 0; col < mm; ++col) inner += q_row[col] * v[col];
            value += w[row] * inner;
        }
        return value;
    };
    return accumulate_chunked(orders, samples, seed, draw);
}

McEstimate mc_sphere_poly(const Polynomial& poly, long samples, std::uint64_t seed) {
    const int m = poly.dimension();
    if (m < 2) throw std::invalid_argument("sphere sampling: dimension must be >= 2");

    struct CompiledTerm {
        std::vector<int> exponents;
        double coefficient;
    };
    std::vector<CompiledTerm> compiled;
    compiled.reserve(poly.term_count());
    for (const auto& [e, c] : poly.terms()) compiled.push_back({e, to_double(c)});

    std::vector<double> x(m);
    const auto draw = [&](Rng& rng) {
        for (;;) {
            fill_normal(x, rng);
            double norm_sq = 0.0;
            for (double v : x) norm_sq += v * v;
            if (norm_sq < 1e-12) continue;
            const double inv_norm = 1.0 / std::sqrt(norm_sq);
            for (double& v : x) v *= inv_norm;
            break;
        }
        double value = 0.0;
        for (const auto& term : compiled) {
            double monomial = term.coefficient;
            for (int i = 0; i < m; ++i)
                for (int e = 0; e < term.exponents[i]; ++e) monomial *= x[i];
            value += monomial;
        }
        return value;
    };
    return accumulate_chunked({1}, samples, seed, draw).front();
}

McEstimate mc_simplex(int m, int n, double mu, double nu, int k, long samples,
                      std::uint64_t seed) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("simplex sampling: dimensions must be >= 2");
    if (k < 0) throw std::invalid_argument("simplex sampling: negative order");
    const auto draw = [&](Rng& rng) {
        const double g1 = rng.gamma_half_integer(2 * (m - 1));
        const double g2 = rng.gamma_half_integer(2 * (n - 1));
        const double g3 = rng.gamma_half_integer(2);
        const double total = g1 + g2 + g3;
        const double x = g1 / total;
        const double y = g2 / total;
        return x * x * mu + y * y * nu;
    };
    return accumulate_chunked({k}, samples, seed, draw).front();
}

}  // namespace curvmo
