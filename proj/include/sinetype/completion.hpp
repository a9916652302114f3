#pragma once

/*
 * completion.hpp — determining the head zeros from the tail of the sequence.
 *
 * Given only {z_n}_{n≥1}, the tail w is recovered by moment inversion; the
 * resulting θ̃ = S + ∫w̃ then has N further zeros, found by winding counts
 * on a rectangle grown around the polynomial lattice points.
 *
 * Conversely, replacing the head by N arbitrary numbers and rebuilding the
 * canonical product yields a function of the form S + P_{N-1}·S₀ + tail;
 * verify_eq13 extracts P_{N-1} by sampling (θ_arb - S)/S₀ at geometric
 * heights iy (the tail term dies off along iℝ) and then recovers the
 * remaining tail from the moment system with right-hand side
 * -(S + P_{N-1}S₀)^{(ν)}(z_k).
 */

#include "sinetype/moments.hpp"

namespace sinetype {

// partial must start at index 1; returns the full sequence 1-N..last.
ZeroSequence complete_zeros(const ZeroSequence& partial, const MainPart& main, int M);

struct Eq13Report {
    std::vector<Complex> poly_coeffs; // degree N-1, ascending; empty when N = 0
    FourierTail tail;
    double fit_residual = 0.0; // combined polynomial-fit and moment residual
};

// arbitrary_head holds the N replacement values for indices 1-N..0.
Eq13Report verify_eq13(const std::vector<Complex>& arbitrary_head, const ZeroSequence& partial,
                       const MainPart& main, int M, double y0 = 1e5);

} // namespace sinetype
