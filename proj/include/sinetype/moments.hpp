#pragma once

/*
 * moments.hpp — recovering the tail w from zeros of θ.
 *
 * At every zero z_k of θ with multiplicity m_k (taken from the subsequence
 * n ≥ 1 only, so the result cannot depend on head entries),
 *
 *   ∫_{-b}^{b} w(x) (ix)^ν e^{i z_k x} dx = -S^{(ν)}(z_k),   ν = 0..m_k-1.
 *
 * Expanding w over the modes e^{iπjx/b}, |j| ≤ M, each row left-hand side
 * has the closed form 2 b^{ν+1} sinc^{(ν)}(b z_k + πj).  With K ≥ 2M+1 rows
 * the system is overdetermined; least squares (column-pivoted QR) inverts
 * it, and the squared singular values of the matrix scaled by 1/(2b) bound
 * the frame constants of {x^ν e^{i z_k x}} against the mode basis.
 */

#include <Eigen/Core>

#include "sinetype/model.hpp"

namespace sinetype {

struct MomentNode {
    Complex z;
    int multiplicity = 1;
};

struct MomentSystem {
    Eigen::MatrixXcd A;            // K x (2M+1), column j+M is mode j
    Eigen::VectorXcd rhs;          // -S^{(ν)}(z_k)
    std::vector<MomentNode> nodes; // consecutive equal zeros grouped
    int M = 0;
    double b = 0.0;
    int K = 0; // equations = zero entries consumed
};

// Uses entries n = 1..K of `zeros` (K = 0 means every entry with n >= 1).
// Consecutive entries equal within 1e-7 are one node with derivative rows.
MomentSystem build_moment_system(const ZeroSequence& zeros, const MainPart& main, int M, int K = 0);

struct FrameEstimate {
    double m_est = 0.0; // smallest squared singular value of A/(2b)
    double M_est = 0.0; // largest
};

FrameEstimate frame_bounds_estimate(const MomentSystem& system);

struct InversionResult {
    FourierTail tail;
    double residual_norm = 0.0; // ‖A c - rhs‖₂
};

// Least-squares solve; IllConditioned when the frame lower estimate is
// at or below 1e-8.
InversionResult invert_to_tail(const MomentSystem& system);

} // namespace sinetype
