#pragma once

#include "curvmo/curvature.hpp"
#include "curvmo/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace curvmo {

/// Quadratic invariants of one 4-dimensional model: the squared first
/// moment, the second moment, and the squared norm of the trace-free Ricci
/// tensor. These three span the natural quadratic curvature polynomials.
struct InvariantVector {
    Rational psi1_sq;
    Rational psi2;
    Rational ric0_sq;
    std::string label;
};

struct ModelTableRow {
    InvariantVector invariants;
    /// (4 pi^2 / 3) times the Euler-density value of the model.
    Rational pf2_scaled;
};

/// The four reference models - the complex projective plane, the round
/// 4-sphere, and the products S^2 x S^2 and S^1 x S^3 - with all invariant
/// columns computed from the tensor engine and the Euler column attached.
/// Row order: CP^2, S^4, S^2 x S^2, S^1 x S^3.
std::vector<ModelTableRow> model_table();

inline constexpr std::array<const char*, 4> kModelLabels = {"CP^2", "S^4", "S^2 x S^2",
                                                            "S^1 x S^3"};

struct InterpolationResult {
    bool consistent = false;
    Rational c1;  ///< coefficient of psi1^2
    Rational c2;  ///< coefficient of psi2
    Rational c3;  ///< coefficient of ric0_sq
    /// Row defects A c - value, one per model; all zero iff consistent.
    std::array<Rational, 4> residuals;
};

/// Solves the exact 4x3 system  c1 psi1^2 + c2 psi2 + c3 ric0_sq = value
/// over the model table. The system has rank 3, so a quadratic natural
/// invariant determines its coefficients uniquely; an inconsistent value
/// vector is reported through the residuals.
InterpolationResult interpolate_invariant(const std::array<Rational, 4>& values);

/// Pointwise Euler-density identity for a 4-dimensional tensor:
///   (4 pi^2/3) pf2 + (4/9) |Ric0|^2  =  psi2 + 4 (psi2 - psi1^2),
/// with (4 pi^2/3) pf2 := 5 psi2 - 4 psi1^2 - (4/9) |Ric0|^2 as pinned by
/// interpolation on the model table.
struct HitchinThorpeReport {
    Rational psi1;
    Rational second_moment_term;  ///< psi2
    Rational variance_term;       ///< psi2 - psi1^2
    Rational ric0_sq;
    Rational pf2_scaled;          ///< (4 pi^2 / 3) pf2
    Rational lhs;                 ///< pf2_scaled + (4/9) ric0_sq
    Rational rhs;                 ///< psi2 + 4 (psi2 - psi1^2)
    bool second_moment_nonnegative = false;
    bool variance_nonnegative = false;
    bool identity_holds = false;
};

HitchinThorpeReport hitchin_thorpe_report(const CurvatureTensor& tensor);

}  // namespace curvmo
