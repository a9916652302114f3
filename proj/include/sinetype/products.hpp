#pragma once

/*
 * products.hpp — evaluating θ from its zeros.
 *
 * Ratio form:      θ(z) = S(z) · Π_{n≥1-N} (z_n - z)/(z_n⁰ - z)
 * Canonical form:  θ(z) = α e^{βz} Π_{n≥1-N} ((z_n - z)/μ_n) e^{z/μ_n}
 *
 * The ratio form converges like the residual sequence: the neglected factor
 * beyond n_max satisfies  log|tail| ≤ ‖ϰ_tail‖ · sqrt(Σ_{n>n_max} |μ_n^N (z_n⁰-z)|⁻²)
 * (Cauchy–Schwarz), which is estimated and certified against tail_tol.
 * The canonical form converges only like 1/n_max and is provided for direct
 * validation of the constants (s, α, γ).
 */

#include "sinetype/model.hpp"

namespace sinetype {

// Evaluate via the zero-ratio product over all supplied entries.  The
// unseen residual tail is bounded with ‖ϰ_tail‖ estimated from the last
// decile of the supplied residuals; if the certified bound on the relative
// truncation error exceeds tail_tol, TailBoundExceeded is thrown.
// z must stay 1e-12 away from every lattice point used and at least
// separation/3 away from the lattice beyond the sequence.
Complex product_eval_ratio(const MainPart& main, const ZeroSequence& zeros, Complex z,
                           double tail_tol);

// Truncated canonical product with the leading data of `main`.  Truncations
// at n_max and 2·n_max (clamped to the sequence) must agree within tol, else
// SlowConvergence.
Complex product_eval_hadamard(const MainPart& main, const ZeroSequence& zeros, Complex z, int n_max,
                              double tol = 3e-4);

} // namespace sinetype
