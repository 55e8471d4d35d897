#include "curvmo/curvature.hpp"

#include "curvmo/rng.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace curvmo {

namespace {

using Json = nlohmann::ordered_json;

int checked_dimension(int m, int minimum, const char* what) {
    if (m < minimum) {
        std::ostringstream msg;
        msg << what << ": dimension parameter " << m << " below minimum " << minimum;
        throw std::invalid_argument(msg.str());
    }
    return m;
}

/// Matrix of an orthogonal complex structure, entry [a][b] = a-component of
/// the image of e_b. Returns +/-1 entries in a dense int grid.
std::vector<std::vector<int>> complex_structure_i(int dim) {
    std::vector<std::vector<int>> s(dim, std::vector<int>(dim, 0));
    for (int t = 0; t + 1 < dim; t += 2) {
        s[t + 1][t] = 1;
        s[t][t + 1] = -1;
    }
    return s;
}

// Left multiplication by i, j, k on quaternion coordinate blocks (1,i,j,k).
std::vector<std::vector<int>> quaternion_structure(int dim, char which) {
    std::vector<std::vector<int>> s(dim, std::vector<int>(dim, 0));
    for (int b = 0; b + 3 < dim; b += 4) {
        switch (which) {
            case 'i':
                s[b + 1][b] = 1;
                s[b][b + 1] = -1;
                s[b + 3][b + 2] = 1;
                s[b + 2][b + 3] = -1;
                break;
            case 'j':
                s[b + 2][b] = 1;
                s[b + 3][b + 1] = -1;
                s[b][b + 2] = -1;
                s[b + 1][b + 3] = 1;
                break;
            case 'k':
                s[b + 3][b] = 1;
                s[b + 2][b + 1] = 1;
                s[b + 1][b + 2] = -1;
                s[b][b + 3] = -1;
                break;
            default:
                throw std::logic_error("quaternion_structure: bad tag");
        }
    }
    return s;
}

/// Adds to `tensor` the projective-space building block generated by one
/// orthogonal structure S:  S(k,i)S(l,j) - S(k,j)S(l,i) + 2 S(j,i)S(l,k),
/// scaled by `weight`.
void add_structure_block(CurvatureTensor& tensor, const std::vector<std::vector<int>>& s,
                         const Rational& weight) {
    const int m = tensor.dimension();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const int value =
                        s[k][i] * s[l][j] - s[k][j] * s[l][i] + 2 * s[j][i] * s[l][k];
                    if (value != 0)
                        tensor.set(i, j, k, l, tensor(i, j, k, l) + weight * value);
                }
}

/// Adds weight * (delta(i,k) delta(j,l) - delta(j,k) delta(i,l)), the
/// component form of (X,Y,Z) -> g(X,Z)Y - g(Y,Z)X. A space form of
/// sectional curvature c is the weight -c instance.
void add_metric_block(CurvatureTensor& tensor, const Rational& weight) {
    const int m = tensor.dimension();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            tensor.set(i, j, i, j, tensor(i, j, i, j) + weight);
            tensor.set(i, j, j, i, tensor(i, j, j, i) - weight);
        }
}

void require_valid(const CurvatureTensor& tensor, const char* what) {
    const auto violations = validate(tensor);
    if (!violations.empty())
        throw std::invalid_argument(std::string(what) + ": invalid curvature tensor (" +
                                    violations.front() + ")");
}

}  // namespace

CurvatureTensor::CurvatureTensor(int dimension)
    : dim_(checked_dimension(dimension, 1, "curvature tensor")),
      comp_(static_cast<std::size_t>(dimension) * dimension * dimension * dimension,
            Rational(0)) {}

CurvatureTensor make_zero(int m) { return CurvatureTensor(m); }

CurvatureTensor make_constant_curvature(int m, const Rational& c) {
    checked_dimension(m, 2, "constant curvature tensor");
    CurvatureTensor tensor(m);
    add_metric_block(tensor, -c);
    return tensor;
}

CurvatureTensor make_cpn(int n, const Rational& kappa) {
    checked_dimension(n, 2, "complex projective tensor");
    const int m = 2 * n;
    CurvatureTensor tensor(m);
    const Rational pref = -kappa / Rational(4 * n * (n + 1));
    // R_{X,Y}Z = pref ( g(X,Z)Y - g(Y,Z)X + g(IX,Z)IY - g(IY,Z)IX + 2 g(IX,Y)IZ )
    add_metric_block(tensor, pref);
    add_structure_block(tensor, complex_structure_i(m), pref);
    return tensor;
}

CurvatureTensor make_hpn(int n, const Rational& kappa) {
    checked_dimension(n, 2, "quaternionic projective tensor");
    const int m = 4 * n;
    CurvatureTensor tensor(m);
    const Rational pref = -kappa / Rational(16 * n * (n + 2));
    add_metric_block(tensor, pref);
    for (char tag : {'i', 'j', 'k'})
        add_structure_block(tensor, quaternion_structure(m, tag), pref);
    return tensor;
}

CurvatureTensor direct_sum(const CurvatureTensor& a, const CurvatureTensor& b) {
    const int ma = a.dimension();
    const int mb = b.dimension();
    CurvatureTensor tensor(ma + mb);
    for (int i = 0; i < ma; ++i)
        for (int j = 0; j < ma; ++j)
            for (int k = 0; k < ma; ++k)
                for (int l = 0; l < ma; ++l)
                    if (a(i, j, k, l) != 0) tensor.set(i, j, k, l, a(i, j, k, l));
    for (int i = 0; i < mb; ++i)
        for (int j = 0; j < mb; ++j)
            for (int k = 0; k < mb; ++k)
                for (int l = 0; l < mb; ++l)
                    if (b(i, j, k, l) != 0)
                        tensor.set(ma + i, ma + j, ma + k, ma + l, b(i, j, k, l));
    return tensor;
}

CurvatureTensor scale(const CurvatureTensor& tensor, const Rational& factor) {
    const int m = tensor.dimension();
    CurvatureTensor result(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    if (tensor(i, j, k, l) != 0)
                        result.set(i, j, k, l, factor * tensor(i, j, k, l));
    return result;
}

CurvatureTensor project_to_curvature(int m, const std::vector<Rational>& raw) {
    checked_dimension(m, 1, "curvature projection");
    const auto expected = static_cast<std::size_t>(m) * m * m * m;
    if (raw.size() != expected)
        throw std::invalid_argument("curvature projection: component array has wrong size");

    CurvatureTensor t(m);
    const auto raw_at = [&](int i, int j, int k, int l) -> const Rational& {
        return raw[((static_cast<std::size_t>(i) * m + j) * m + k) * m + l];
    };
    const Rational half(1, 2);
    const Rational third(1, 3);

    // Antisymmetrize in (i,j) and (k,l), then symmetrize the pair exchange.
    CurvatureTensor a(m), b(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    a.set(i, j, k, l, half * (raw_at(i, j, k, l) - raw_at(j, i, k, l)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    b.set(i, j, k, l, half * (a(i, j, k, l) - a(i, j, l, k)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    t.set(i, j, k, l, half * (b(i, j, k, l) + b(k, l, i, j)));

    // Remove the cyclic component; what is left satisfies the Bianchi identity.
    CurvatureTensor result(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    const Rational cyclic =
                        third * (t(i, j, k, l) + t(j, k, i, l) + t(k, i, j, l));
                    result.set(i, j, k, l, t(i, j, k, l) - cyclic);
                }
    return result;
}

CurvatureTensor random_tensor(int m, std::uint64_t seed, int magnitude) {
    checked_dimension(m, 2, "random tensor");
    if (magnitude < 0) throw std::invalid_argument("random tensor: negative magnitude");
    Rng rng(derive_seed(seed, 0));
    const auto count = static_cast<std::size_t>(m) * m * m * m;
    std::vector<Rational> raw;
    raw.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const long long num = rng.uniform_int(-magnitude, magnitude);
        const long long den = rng.uniform_int(1, 4);
        raw.push_back(Rational(BigInt(num), BigInt(den)));
    }
    return project_to_curvature(m, raw);
}

std::vector<std::string> validate(const CurvatureTensor& tensor) {
    std::vector<std::string> violations;
    const int m = tensor.dimension();
    const auto report = [&](const char* kind, int i, int j, int k, int l) {
        std::ostringstream msg;
        msg << kind << " violated at (" << i << "," << j << "," << k << "," << l << ")";
        violations.push_back(msg.str());
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l) {
                    if (tensor(i, j, k, l) != -tensor(j, i, k, l))
                        report("antisymmetry in (i,j)", i, j, k, l);
                    if (tensor(i, j, k, l) != -tensor(i, j, l, k))
                        report("antisymmetry in (k,l)", i, j, k, l);
                    if (tensor(i, j, k, l) != tensor(k, l, i, j))
                        report("pair-exchange symmetry", i, j, k, l);
                    if (tensor(i, j, k, l) + tensor(j, k, i, l) + tensor(k, i, j, l) != 0)
                        report("first Bianchi identity", i, j, k, l);
                }
    return violations;
}

Rational gram_determinant(const TwoPlaneSpan& plane) {
    if (plane.x.size() != plane.y.size() || plane.x.empty())
        throw std::invalid_argument("two-plane: spanning vectors must have equal length");
    Rational xx(0), yy(0), xy(0);
    for (std::size_t i = 0; i < plane.x.size(); ++i) {
        xx += plane.x[i] * plane.x[i];
        yy += plane.y[i] * plane.y[i];
        xy += plane.x[i] * plane.y[i];
    }
    return xx * yy - xy * xy;
}

Rational sectional_curvature(const CurvatureTensor& tensor, const TwoPlaneSpan& plane) {
    const int m = tensor.dimension();
    if (static_cast<int>(plane.x.size()) != m)
        throw std::invalid_argument("sectional curvature: vector length != dimension");
    const Rational gram = gram_determinant(plane);
    if (gram == 0) throw std::invalid_argument("sectional curvature: degenerate span");

    // g(R_{Y,X} X, Y) = sum R(a,i,j,b) Y_a X_i X_j Y_b
    Rational numerator(0);
    for (int a = 0; a < m; ++a) {
        if (plane.y[a] == 0) continue;
        for (int b = 0; b < m; ++b) {
            if (plane.y[b] == 0) continue;
            Rational inner(0);
            for (int i = 0; i < m; ++i) {
                if (plane.x[i] == 0) continue;
                for (int j = 0; j < m; ++j) {
                    if (plane.x[j] == 0 || tensor(a, i, j, b) == 0) continue;
                    inner += tensor(a, i, j, b) * plane.x[i] * plane.x[j];
                }
            }
            numerator += inner * plane.y[a] * plane.y[b];
        }
    }
    return numerator / gram;
}

std::vector<std::vector<Polynomial>> jacobi_matrix(const CurvatureTensor& tensor) {
    require_valid(tensor, "jacobi matrix");
    const int m = tensor.dimension();
    std::vector<std::vector<Polynomial>> matrix(m, std::vector<Polynomial>(m, Polynomial(m)));
    MultiIndex key(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Polynomial& entry = matrix[a][b];
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const Rational& c = tensor(a, i, j, b);
                    if (c == 0) continue;
                    key.assign(m, 0);
                    key[i] += 1;
                    key[j] += 1;
                    entry.add_term(key, c);
                }
        }
    return matrix;
}

std::vector<std::vector<Rational>> jacobi_matrix_at(const CurvatureTensor& tensor,
                                                    std::span<const Rational> x) {
    const int m = tensor.dimension();
    if (static_cast<int>(x.size()) != m)
        throw std::invalid_argument("jacobi matrix: direction has wrong length");
    std::vector<std::vector<Rational>> matrix(m, std::vector<Rational>(m, Rational(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Rational value(0);
            for (int i = 0; i < m; ++i) {
                if (x[i] == 0) continue;
                for (int j = 0; j < m; ++j) {
                    if (x[j] == 0) continue;
                    const Rational& c = tensor(a, i, j, b);
                    if (c != 0) value += c * x[i] * x[j];
                }
            }
            matrix[a][b] = value;
        }
    return matrix;
}

std::vector<std::vector<Rational>> ricci(const CurvatureTensor& tensor) {
    require_valid(tensor, "ricci");
    const int m = tensor.dimension();
    std::vector<std::vector<Rational>> ric(m, std::vector<Rational>(m, Rational(0)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Rational value(0);
            for (int mu = 0; mu < m; ++mu) value += tensor(mu, a, b, mu);
            ric[a][b] = value;
        }
    return ric;
}

Rational scalar_curvature(const CurvatureTensor& tensor) {
    const auto ric = ricci(tensor);
    Rational kappa(0);
    for (std::size_t a = 0; a < ric.size(); ++a) kappa += ric[a][a];
    return kappa;
}

Rational ric0_norm_sq(const CurvatureTensor& tensor) {
    const auto ric = ricci(tensor);
    const int m = tensor.dimension();
    Rational kappa(0), norm_sq(0);
    for (int a = 0; a < m; ++a) kappa += ric[a][a];
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) norm_sq += ric[a][b] * ric[a][b];
    norm_sq /= 2;
    return norm_sq - kappa * kappa / Rational(2 * m);
}

JacobiSpectrumModel make_sphere_spectrum(int m) {
    checked_dimension(m, 2, "sphere spectrum");
    return JacobiSpectrumModel{{{Rational(0), 1}, {Rational(1), m - 1}}};
}

JacobiSpectrumModel make_cpn_spectrum(int n) {
    checked_dimension(n, 2, "complex projective spectrum");
    return JacobiSpectrumModel{{{Rational(0), 1}, {Rational(4), 1}, {Rational(1), 2 * n - 2}}};
}

JacobiSpectrumModel make_hpn_spectrum(int n) {
    checked_dimension(n, 2, "quaternionic projective spectrum");
    return JacobiSpectrumModel{{{Rational(0), 1}, {Rational(4), 3}, {Rational(1), 4 * n - 4}}};
}

JacobiSpectrumModel make_op2_spectrum() {
    return JacobiSpectrumModel{{{Rational(0), 1}, {Rational(4), 7}, {Rational(1), 8}}};
}

std::string tensor_to_json(const CurvatureTensor& tensor) {
    Json doc;
    doc["schema_version"] = 1;
    doc["dimension"] = tensor.dimension();
    Json comps = Json::array();
    for (const Rational& c : tensor.components()) comps.push_back(rational_to_string(c));
    doc["components"] = std::move(comps);
    return doc.dump();
}

CurvatureTensor tensor_from_json(const std::string& text) {
    Json doc = Json::parse(text);
    if (!doc.contains("dimension") || !doc.contains("components"))
        throw std::invalid_argument("tensor json: missing dimension or components");
    const int m = doc["dimension"].get<int>();
    CurvatureTensor tensor(m);
    const auto& comps = doc["components"];
    const auto expected = static_cast<std::size_t>(m) * m * m * m;
    if (!comps.is_array() || comps.size() != expected)
        throw std::invalid_argument("tensor json: components must be an array of size m^4");
    std::size_t idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = 0; l < m; ++l)
                    tensor.set(i, j, k, l, parse_rational(comps[idx++].get<std::string>()));
    return tensor;
}

}  // namespace curvmo
