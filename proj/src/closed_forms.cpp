#include "curvmo/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvmo {

namespace {

double simpson(double lo, double hi, double f_lo, double f_mid, double f_hi) {
    return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
}

double adaptive_step(const std::function<double(double)>& f, double lo, double mid, double hi,
                     double f_lo, double f_mid, double f_hi, double whole, double tol,
                     int depth) {
    const double lmid = 0.5 * (lo + mid);
    const double rmid = 0.5 * (mid + hi);
    const double f_lmid = f(lmid);
    const double f_rmid = f(rmid);
    const double left = simpson(lo, mid, f_lo, f_lmid, f_mid);
    const double right = simpson(mid, hi, f_mid, f_rmid, f_hi);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_step(f, lo, lmid, mid, f_lo, f_lmid, f_mid, left, tol / 2.0, depth - 1) +
           adaptive_step(f, mid, rmid, hi, f_mid, f_rmid, f_hi, right, tol / 2.0, depth - 1);
}

void check_cross_params(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("cross family: parameters must be non-negative");
}

/// Sample x ~ Beta(alpha, beta) where 2*alpha, 2*beta are positive integers.
double beta_half_integer(Rng& rng, int twice_alpha, int twice_beta) {
    const double g1 = rng.gamma_half_integer(twice_alpha);
    const double g2 = rng.gamma_half_integer(twice_beta);
    return g1 / (g1 + g2);
}

/// (x, y) from the 2-simplex density proportional to x^(m-2) y^(n-2).
std::pair<double, double> sample_simplex(Rng& rng, int m, int n) {
    const double g1 = rng.gamma_half_integer(2 * (m - 1));
    const double g2 = rng.gamma_half_integer(2 * (n - 1));
    const double g3 = rng.gamma_half_integer(2);
    const double total = g1 + g2 + g3;
    return {g1 / total, g2 / total};
}

class AtomDensity final : public SectionalDensity {
public:
    explicit AtomDensity(double value) : value_(value) {}

    std::pair<double, double> support() const override { return {value_, value_}; }
    bool is_atomic() const override { return true; }
    double atom_value() const override { return value_; }
    double eval(double) const override {
        throw std::domain_error("atomic distribution has no pointwise density");
    }
    double sample(Rng&) const override { return value_; }
    double integral() const override { return 1.0; }

private:
    double value_;
};

class CrossDensityImpl final : public SectionalDensity {
public:
    CrossDensityImpl(int a, int b) : a_(a), b_(b) { check_cross_params(a, b); }

    std::pair<double, double> support() const override { return {1.0, 4.0}; }
    double eval(double s) const override { return cross_density_eval(a_, b_, s); }
    double sample(Rng& rng) const override {
        // s = 1 + 3 u^2 with u^2 ~ Beta(a + 1/2, b + 1).
        const double v = beta_half_integer(rng, 2 * a_ + 1, 2 * b_ + 2);
        return 1.0 + 3.0 * v;
    }
    double integral() const override { return cross_density_moment_quadrature(a_, b_, 0); }

private:
    int a_;
    int b_;
};

class HistogramDensity final : public SectionalDensity {
public:
    HistogramDensity(std::vector<double> masses, double lo, double hi)
        : masses_(std::move(masses)), lo_(lo), hi_(hi) {
        if (masses_.empty() || !(hi_ > lo_))
            throw std::invalid_argument("histogram density: empty support");
        width_ = (hi_ - lo_) / static_cast<double>(masses_.size());
    }

    std::pair<double, double> support() const override { return {lo_, hi_}; }

    double eval(double s) const override {
        if (s < lo_ || s > hi_) return 0.0;
        auto bin = static_cast<std::size_t>((s - lo_) / width_);
        bin = std::min(bin, masses_.size() - 1);
        return masses_[bin] / width_;
    }

    double sample(Rng& rng) const override {
        double target = rng.uniform01();
        for (std::size_t i = 0; i < masses_.size(); ++i) {
            if (target < masses_[i] || i + 1 == masses_.size())
                return lo_ + (static_cast<double>(i) + rng.uniform01()) * width_;
            target -= masses_[i];
        }
        return hi_;
    }

    double integral() const override {
        double total = 0.0;
        for (double mass : masses_) total += mass;
        return total;
    }

private:
    std::vector<double> masses_;
    double lo_;
    double hi_;
    double width_;
};

std::pair<double, double> kernel_support(const ProductKernel& kernel) {
    const double lo = std::min({kernel.mu, kernel.nu, 0.0});
    const double hi = std::max({kernel.mu, kernel.nu, 0.0});
    return {lo, hi};
}

void check_kernel_params(const ProductKernel& kernel) {
    if (kernel.m < 2 && !(kernel.m == 1 && kernel.mu == 0.0))
        throw std::invalid_argument("product kernel: left dimension must be >= 2");
    if (kernel.n < 2 && !(kernel.n == 1 && kernel.nu == 0.0))
        throw std::invalid_argument("product kernel: right dimension must be >= 2");
}

/// Closed-form kernel density for nu = 0 (mu != 0, orientation-normalized):
/// (m+n-2)! / ((m-2)! (n-1)!) sqrt(s/mu)^(m-3) (1 - sqrt(s/mu))^(n-1) / (2|mu|).
double kernel_density_one_sided(int m, int n, double mu, double s) {
    const double ratio = s / mu;
    if (ratio < 0.0 || ratio > 1.0) return 0.0;
    const double root = std::sqrt(ratio);
    const double prefactor =
        to_double(Rational(factorial(m + n - 2), factorial(m - 2) * factorial(n - 1)));
    return prefactor * std::pow(root, m - 3) * std::pow(1.0 - root, n - 1) /
           (2.0 * std::abs(mu));
}

class KernelDensityImpl final : public SectionalDensity {
public:
    KernelDensityImpl(const ProductKernel& kernel, const McConfig& config)
        : kernel_(kernel), config_(config) {
        check_kernel_params(kernel);
        if (kernel_.mu == 0.0 && kernel_.nu == 0.0)
            throw std::invalid_argument(
                "product kernel: both factors flat; the distribution is an atom at 0");
        if (kernel_.mu != 0.0 && kernel_.nu != 0.0) {
            if (kernel_.m < 2 || kernel_.n < 2)
                throw std::invalid_argument(
                    "product kernel: general path needs both dimensions >= 2");
            build_histogram();  // immutable afterwards, safe to share
        }
    }

    std::pair<double, double> support() const override { return kernel_support(kernel_); }

    double eval(double s) const override {
        if (kernel_.nu == 0.0)
            return kernel_density_one_sided(kernel_.m, kernel_.n, kernel_.mu, s);
        if (kernel_.mu == 0.0)
            return kernel_density_one_sided(kernel_.n, kernel_.m, kernel_.nu, s);
        return histogram_->eval(s);
    }

    double sample(Rng& rng) const override {
        if (kernel_.nu == 0.0) {
            const double x = beta_half_integer(rng, 2 * (kernel_.m - 1), 2 * kernel_.n);
            return x * x * kernel_.mu;
        }
        if (kernel_.mu == 0.0) {
            const double y = beta_half_integer(rng, 2 * (kernel_.n - 1), 2 * kernel_.m);
            return y * y * kernel_.nu;
        }
        const auto [x, y] = sample_simplex(rng, kernel_.m, kernel_.n);
        return x * x * kernel_.mu + y * y * kernel_.nu;
    }

    double integral() const override {
        if (kernel_.mu != 0.0 && kernel_.nu != 0.0) return histogram_->integral();
        // Substituting s = mu t^2 (or nu t^2) turns the density into the
        // polynomial t^(m-2) (1-t)^(n-1) up to its normalization, with the
        // m = 2 endpoint singularity gone.
        const int m = kernel_.nu == 0.0 ? kernel_.m : kernel_.n;
        const int n = kernel_.nu == 0.0 ? kernel_.n : kernel_.m;
        const double prefactor =
            to_double(Rational(factorial(m + n - 2), factorial(m - 2) * factorial(n - 1)));
        return integrate_adaptive(
            [&](double t) { return prefactor * std::pow(t, m - 2) * std::pow(1.0 - t, n - 1); },
            0.0, 1.0, 1e-12);
    }

private:
    void build_histogram() {
        const auto [lo, hi] = support();
        std::vector<double> masses(static_cast<std::size_t>(config_.bins), 0.0);
        Rng rng(derive_seed(config_.seed, 0x6b65726eULL));
        const double mass = 1.0 / static_cast<double>(config_.samples);
        const double width = (hi - lo) / static_cast<double>(config_.bins);
        for (long i = 0; i < config_.samples; ++i) {
            const double s = sample(rng);
            auto bin = static_cast<std::size_t>((s - lo) / width);
            bin = std::min(bin, masses.size() - 1);
            masses[bin] += mass;
        }
        histogram_ = std::make_unique<HistogramDensity>(std::move(masses), lo, hi);
    }

    ProductKernel kernel_;
    McConfig config_;
    std::unique_ptr<HistogramDensity> histogram_;
};

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_lo = f(lo);
    const double f_mid = f(mid);
    const double f_hi = f(hi);
    const double whole = simpson(lo, hi, f_lo, f_mid, f_hi);
    return adaptive_step(f, lo, mid, hi, f_lo, f_mid, f_hi, whole, tol, 40);
}

Rational cross_moment(int a, int b, int k) {
    check_cross_params(a, b);
    if (k < 0) throw std::invalid_argument("cross family: negative moment order");
    Rational sum(0);
    for (int r = 0; r <= k; ++r)
        sum += rat_pow(Rational(4), r) * gen_binomial(Rational(-(2 * a + 1), 2), r) *
               gen_binomial(Rational(-(2 * b + 2), 2), k - r);
    return sum / gen_binomial(Rational(-(2 * a + 2 * b + 3), 2), k);
}

Rational cross_prefactor(int a, int b) {
    check_cross_params(a, b);
    return Rational(2 * a + 1, 6) * gen_binomial(Rational(2 * (a + b) + 1, 2), b);
}

double cross_density_eval(int a, int b, double s) {
    check_cross_params(a, b);
    if (s < 1.0 || s > 4.0)
        throw std::domain_error("cross density: point outside the support [1, 4]");
    if (s == 1.0 && a == 0)
        throw std::domain_error("cross density: singular endpoint s = 1 for a = 0");
    const double prefactor = to_double(cross_prefactor(a, b));
    return prefactor * std::pow((s - 1.0) / 3.0, (2.0 * a - 1.0) / 2.0) *
           std::pow((4.0 - s) / 3.0, b);
}

double cross_density_moment_quadrature(int a, int b, int k) {
    check_cross_params(a, b);
    if (k < 0) throw std::invalid_argument("cross family: negative moment order");
    // s = 1 + 3u^2 turns the measure into a polynomial in u on [0, 1].
    const double prefactor = to_double(cross_prefactor(a, b)) * 6.0;
    const auto integrand = [&](double u) {
        const double u_sq = u * u;
        return prefactor * std::pow(u_sq, a) * std::pow(1.0 - u_sq, b) *
               std::pow(1.0 + 3.0 * u_sq, k);
    };
    return integrate_adaptive(integrand, 0.0, 1.0, 1e-13);
}

Rational product_moment(const MomentSequence& left, int m, const MomentSequence& right, int n,
                        int k) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("product moments: factor dimensions must be >= 1");
    if (k < 0) throw std::invalid_argument("product moments: negative order");
    if (k >= static_cast<int>(left.values.size()) ||
        k >= static_cast<int>(right.values.size()))
        throw std::invalid_argument("product moments: order beyond available sequences");

    Rational sum(0);
    for (int r = 0; r <= k; ++r) {
        const Rational weight =
            Rational(int_binomial(k, r)) * falling_factorial(Rational(m + 2 * r - 2), 2 * r) *
            falling_factorial(Rational(n + 2 * (k - r) - 2), 2 * (k - r));
        if (weight == 0) continue;
        sum += weight * left.values[r] * right.values[k - r];
    }
    return sum / falling_factorial(Rational(m + n + 2 * k - 2), 2 * k);
}

Rational gr2rn_moment(int n, int k) {
    if (n < 4)
        throw std::invalid_argument("real Grassmannian moments: n must be at least 4");
    if (k < 0) throw std::invalid_argument("real Grassmannian moments: negative order");

    Rational sum(0);
    for (int mu = 0; 2 * mu <= k; ++mu)
        for (int nu = 0; 2 * (mu + nu) <= k; ++nu) {
            const Rational sign = (nu % 2 == 0) ? Rational(1) : Rational(-1);
            sum += sign / rat_pow(Rational(4), mu) *
                   Rational(n - 3, n + 2 * mu + 2 * nu - 3) *
                   gen_binomial(Rational(-(n - 4), 2), mu) *
                   gen_binomial(Rational(-1, 2), nu) *
                   gen_binomial(Rational(-(n + 2 * mu + 4 * nu - 2), 2), k - 2 * mu - 2 * nu);
        }
    return sum / gen_binomial(Rational(-(2 * n - 5), 2), k);
}

Rational simplex_integral(const std::vector<int>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("simplex integral: need at least one exponent");
    const int n = static_cast<int>(exponents.size()) - 1;
    int sum = 0;
    BigInt numerator(1);
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("simplex integral: negative exponent");
        sum += e;
        numerator *= factorial(e);
    }
    return Rational(numerator, factorial(n + sum));
}

double SectionalDensity::atom_value() const {
    throw std::domain_error("density is not atomic");
}

double SectionalDensity::integral() const {
    const auto [lo, hi] = support();
    return integrate_adaptive([this](double s) { return eval(s); }, lo, hi, 1e-10);
}

DensityPtr make_atom_density(double value) { return std::make_shared<AtomDensity>(value); }

DensityPtr make_cross_density(int a, int b) {
    return std::make_shared<CrossDensityImpl>(a, b);
}

DensityPtr make_kernel_density(const ProductKernel& kernel, const McConfig& config) {
    if (kernel.mu == 0.0 && kernel.nu == 0.0) return make_atom_density(0.0);
    return std::make_shared<KernelDensityImpl>(kernel, config);
}

double product_kernel_density(const ProductKernel& kernel, double s, const McConfig& config) {
    return make_kernel_density(kernel, config)->eval(s);
}

DensityPtr product_density(const DensityPtr& left, int m, const DensityPtr& right, int n,
                           const McConfig& config) {
    if (!left || !right) throw std::invalid_argument("product density: null factor");
    for (const auto& [density, dim] : {std::pair{left, m}, std::pair{right, n}}) {
        if (dim < 1) throw std::invalid_argument("product density: factor dimension < 1");
        if (!density->is_atomic() && std::abs(density->integral() - 1.0) > 1e-6)
            throw std::invalid_argument("product density: factor density is not normalized");
    }

    if (left->is_atomic() && right->is_atomic())
        return make_kernel_density(
            ProductKernel{m, n, left->atom_value(), right->atom_value()}, config);

    // Mixture over the factor laws: draw (mu, nu), then push the simplex
    // variable through x^2 mu + y^2 nu.
    const auto [l_lo, l_hi] = left->support();
    const auto [r_lo, r_hi] = right->support();
    const double lo = std::min({l_lo, r_lo, 0.0});
    const double hi = std::max({l_hi, r_hi, 0.0});
    std::vector<double> masses(static_cast<std::size_t>(config.bins), 0.0);
    Rng rng(derive_seed(config.seed, 0x6d6978ULL));
    const double mass = 1.0 / static_cast<double>(config.samples);
    const double width = (hi - lo) / static_cast<double>(config.bins);
    for (long i = 0; i < config.samples; ++i) {
        const double mu = left->sample(rng);
        const double nu = right->sample(rng);
        const auto [x, y] = sample_simplex(rng, m, n);
        const double s = x * x * mu + y * y * nu;
        auto bin = static_cast<std::size_t>((s - lo) / width);
        bin = std::min(bin, masses.size() - 1);
        masses[bin] += mass;
    }
    return std::make_shared<HistogramDensity>(std::move(masses), lo, hi);
}

}  // namespace curvmo
