#pragma once

/*
 * sturm_liouville.hpp — Dirichlet characteristic functions on (0, π).
 *
 * Two representations are reduced to the common form θ(z) = P(z)·sin(πz)
 * + ∫_{-π}^{π} w(x) e^{izx} dx by a change of variable z² = λ:
 *
 *   L₂ potential class:      z²Δ(z²) = z·sin(πz) + ∫₀^π u(x) cos(zx) dx,
 *                            w(x) = u(|x|)/2,              P(z) = z;
 *   W₂⁻¹ potential class:    z·Δ(z²) = sin(πz) + ∫₀^π v(x) sin(zx) dx,
 *                            w = odd extension of v/(2i),  P(z) = 1.
 *
 * Eigenvalues λ_n sit at z = ±√λ_n, so a spectrum unfolds into a zero
 * sequence on the integer lattice and every z-plane tool applies.  The
 * stability experiments compare ‖û‖ (recovered through the moment system)
 * against the spectral metrics Λ_j in the λ-plane.
 */

#include <vector>

#include "sinetype/model.hpp"

namespace sinetype {

// u(x) = Σ_{k≥0} u_modes[k] cos(kx); the mean u_modes[0] must vanish
ThetaFunction theta_from_u(const std::vector<Complex>& u_modes);

// v(x) = Σ_{k≥1} v_modes[k-1] sin(kx)
ThetaFunction theta_from_v(const std::vector<Complex>& v_modes);

// eigenvalues λ_n, n = 1..size
class Spectrum {
public:
    explicit Spectrum(std::vector<Complex> eigenvalues);

    int size() const { return int(values_.size()); }
    Complex at(int n) const; // 1-based
    const std::vector<Complex>& values() const { return values_; }

private:
    std::vector<Complex> values_;
};

Spectrum unperturbed_spectrum(int count); // λ_n = n²

// Λ_j(a, b) = ‖{(a_n - b_n)/n^j}‖_{l2}; sizes must match
double lambda_metric(const Spectrum& a, const Spectrum& b, int j);

// Unfold λ_n to ±√λ_n (principal branch, Re ≥ 0; the cut resolves toward
// +i) on the integer lattice: z_{2k} = √λ_k, z_{2k+1} = -√λ_k, a simple
// zero at the origin for N = 0 and a double one for N = 1.  Eigenvalues
// just under the cut would flip the ± labels: BranchAmbiguity.
ZeroSequence spectrum_to_zeros(const Spectrum& spec, int N);

struct Theorem12Report {
    int profile_N = 1;
    double r = 0.0;     // larger λ-plane distance of the inputs from {n²}
    double lhs = 0.0;   // ‖û‖ (profile N=1) or ‖v̂‖ (N=0), via recovery
    double rhs = 0.0;   // ‖{λ̂_n}‖ for N=1, Λ₁ for N=0
    double ratio = 0.0; // lhs / rhs, 0 when rhs vanishes
};

// Unfolds both spectra, recovers both tails from the zeros alone, and
// reports the potential-space distance against the spectral metric.
Theorem12Report theorem12_experiment(const Spectrum& spec_a, const Spectrum& spec_b,
                                     int profile_N, int num_modes);

} // namespace sinetype
