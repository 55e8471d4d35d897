#include "curvmo/rational.hpp"

#include <stdexcept>

namespace curvmo {

Rational make_rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(BigInt(num), BigInt(den));
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rat_pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rational result(1);
    Rational factor = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= factor;
        if (e > 1) factor *= factor;
    }
    return result;
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt result(1);
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt int_binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt result(1);
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

Rational falling_factorial(const Rational& x, int s) {
    if (s < 0) return Rational(0);
    Rational result(1);
    for (int i = 0; i < s; ++i) result *= (x - i);
    return result;
}

Rational gen_binomial(const Rational& x, int s) {
    if (s < 0) return Rational(0);
    return falling_factorial(x, s) / Rational(factorial(s));
}

}  // namespace curvmo
