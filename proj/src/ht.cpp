#include "curvmo/ht.hpp"

#include "curvmo/moments.hpp"

#include <stdexcept>

namespace curvmo {

std::vector<ModelTableRow> model_table() {
    const CurvatureTensor sphere2 = make_constant_curvature(2, Rational(1));
    const CurvatureTensor sphere3 = make_constant_curvature(3, Rational(1));
    const std::array<CurvatureTensor, 4> models = {
        make_cpn(2, Rational(24)),
        make_constant_curvature(4, Rational(1)),
        direct_sum(sphere2, sphere2),
        direct_sum(make_zero(1), sphere3),
    };
    const std::array<Rational, 4> euler_column = {Rational(8), Rational(1), Rational(1, 3),
                                                  Rational(0)};

    std::vector<ModelTableRow> table;
    table.reserve(4);
    for (std::size_t row = 0; row < models.size(); ++row) {
        const auto moments = moment_sequence(models[row], 2);
        InvariantVector inv;
        inv.psi1_sq = moments.values[1] * moments.values[1];
        inv.psi2 = moments.values[2];
        inv.ric0_sq = ric0_norm_sq(models[row]);
        inv.label = kModelLabels[row];
        table.push_back(ModelTableRow{std::move(inv), euler_column[row]});
    }
    return table;
}

InterpolationResult interpolate_invariant(const std::array<Rational, 4>& values) {
    const auto table = model_table();

    // Augmented matrix [A | b] with rows per model, columns per basis invariant.
    constexpr int rows = 4;
    constexpr int cols = 3;
    std::array<std::array<Rational, cols + 1>, rows> aug;
    for (int r = 0; r < rows; ++r) {
        aug[r][0] = table[r].invariants.psi1_sq;
        aug[r][1] = table[r].invariants.psi2;
        aug[r][2] = table[r].invariants.ric0_sq;
        aug[r][3] = values[r];
    }

    // Exact Gaussian elimination with row pivoting.
    int pivot_row = 0;
    std::array<int, cols> pivot_of_col = {-1, -1, -1};
    for (int c = 0; c < cols && pivot_row < rows; ++c) {
        int found = -1;
        for (int r = pivot_row; r < rows; ++r)
            if (aug[r][c] != 0) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(aug[pivot_row], aug[found]);
        const Rational inv = Rational(1) / aug[pivot_row][c];
        for (int cc = c; cc <= cols; ++cc) aug[pivot_row][cc] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == pivot_row || aug[r][c] == 0) continue;
            const Rational factor = aug[r][c];
            for (int cc = c; cc <= cols; ++cc) aug[r][cc] -= factor * aug[pivot_row][cc];
        }
        pivot_of_col[c] = pivot_row;
        ++pivot_row;
    }

    InterpolationResult result;
    result.consistent = true;
    for (int r = pivot_row; r < rows; ++r)
        if (aug[r][cols] != 0) result.consistent = false;

    std::array<Rational, cols> solution = {Rational(0), Rational(0), Rational(0)};
    if (result.consistent)
        for (int c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) solution[c] = aug[pivot_of_col[c]][cols];
    result.c1 = solution[0];
    result.c2 = solution[1];
    result.c3 = solution[2];

    for (int r = 0; r < rows; ++r)
        result.residuals[r] = result.c1 * table[r].invariants.psi1_sq +
                              result.c2 * table[r].invariants.psi2 +
                              result.c3 * table[r].invariants.ric0_sq - values[r];
    return result;
}

HitchinThorpeReport hitchin_thorpe_report(const CurvatureTensor& tensor) {
    if (tensor.dimension() != 4)
        throw std::invalid_argument("euler identity report: tensor must be 4-dimensional");
    const auto moments = moment_sequence(tensor, 2);

    HitchinThorpeReport report;
    report.psi1 = moments.values[1];
    report.second_moment_term = moments.values[2];
    report.variance_term = report.second_moment_term - report.psi1 * report.psi1;
    report.ric0_sq = ric0_norm_sq(tensor);
    report.pf2_scaled = 5 * report.second_moment_term - 4 * report.psi1 * report.psi1 -
                        Rational(4, 9) * report.ric0_sq;
    report.lhs = report.pf2_scaled + Rational(4, 9) * report.ric0_sq;
    report.rhs = report.second_moment_term + 4 * report.variance_term;
    report.second_moment_nonnegative = report.second_moment_term >= 0;
    report.variance_nonnegative = report.variance_term >= 0;
    report.identity_holds = report.lhs == report.rhs;
    return report;
}

}  // namespace curvmo
