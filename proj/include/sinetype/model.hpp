#pragma once

/*
 * model.hpp — the function class under study.
 *
 * Objects of interest are entire functions
 *
 *   θ(z) = S(z) + ∫_{-b}^{b} w(x) e^{izx} dx,      S(z) = P_N(z)·S₀(z),
 *
 * with S₀ sine-type of exponential type b and w ∈ L₂(-b,b) held as a finite
 * trigonometric mode vector w(x) = Σ_{|k|≤M} c_k e^{iπkx/b}.  The combined
 * zero lattice {z_n⁰}_{n≥1-N} prepends the N polynomial roots (indices
 * 1-N..0) to the base lattice (indices ≥ 1), and
 *
 *   μ_n = z_n⁰  if z_n⁰ ≠ 0,   μ_n = -1  otherwise.
 *
 * Leading data at the origin: s = multiplicity of 0 as a zero of S,
 * α = lim S(z)/z^s, γ = (d/dz) ln(S(z)/z^s)|₀, β = s + γ; these are the
 * constants of the canonical product representation of θ.
 */

#include <complex>
#include <map>
#include <vector>

#include "sinetype/base.hpp"

namespace sinetype {

// ── Fourier tail ────────────────────────────────────────────────────────────

class FourierTail {
public:
    // modes: k -> c_k, |k| <= M; missing modes are zero
    FourierTail(double b, int M, const std::map<int, Complex>& modes);
    static FourierTail zero(double b) { return FourierTail(b, 0, {}); }

    double type() const { return b_; }
    int cutoff() const { return M_; }
    Complex mode(int k) const; // 0 outside |k| <= M

    // ν-th derivative of ∫ w(x) e^{izx} dx; entire in z (removable
    // singularities at z = -πk/b are evaluated by series)
    Complex eval(Complex z, int deriv_order = 0) const;

    double l2_norm() const;    // ‖w‖_{L₂(-b,b)} = sqrt(2b Σ|c_k|²)
    bool is_zero() const;

private:
    double b_;
    int M_;
    std::vector<Complex> modes_; // index k + M
};

// ── Main part S = P_N · S₀ ─────────────────────────────────────────────────

struct LeadingData {
    int s = 0;
    Complex alpha;
    Complex gamma;
    Complex beta; // s + gamma
};

class MainPart {
public:
    // poly_coeffs: ascending powers, degree N = coeffs.size()-1; roots are
    // extracted on construction and snapped to 0 when within rounding of it
    MainPart(SineTypeBase base, std::vector<Complex> poly_coeffs);

    const SineTypeBase& base() const { return base_; }
    int degree() const { return int(poly_zeros_.size()); } // N
    int first_index() const { return 1 - degree(); }       // 1-N
    const std::vector<Complex>& poly_coeffs() const { return poly_coeffs_; }
    const std::vector<Complex>& poly_zeros() const { return poly_zeros_; }

    // combined lattice: indices 1-N..0 are polynomial roots (sorted by
    // descending modulus so index 0 carries the smallest), >= 1 the base
    Complex lattice_point(int n) const;
    Complex mu(int n) const;

    Complex poly_eval(Complex z, int deriv_order = 0) const;
    Complex eval(Complex z, int deriv_order = 0) const; // S^{(ν)}, ν <= 2

    const LeadingData& leading() const { return leading_; }

private:
    SineTypeBase base_;
    std::vector<Complex> poly_coeffs_;
    std::vector<Complex> poly_zeros_;
    LeadingData leading_;
};

// Taylor coefficients of S at 0 by trapezoid-rule Cauchy integrals on the
// circle of radius ρ = half the distance to the nearest nonzero lattice
// point, 256 nodes; a coefficient below 1e-10·max|a_j| counts as zero when
// locating s.  Exposed for cross-checking with independent contours.
LeadingData leading_data(const MainPart& main, int nodes = 256, double radius_scale = 1.0);

// ── θ = S + tail ────────────────────────────────────────────────────────────

class ThetaFunction {
public:
    ThetaFunction(MainPart main, FourierTail tail);

    const MainPart& main() const { return main_; }
    const FourierTail& tail() const { return tail_; }

    Complex eval(Complex z, int deriv_order = 0) const; // ν <= 2

private:
    MainPart main_;
    FourierTail tail_;
};

// ── zero sequences and residuals ────────────────────────────────────────────

// Zeros indexed n = first_index..first_index+size-1, aligned with the
// combined lattice; multiple zeros appear as consecutive equal entries.
class ZeroSequence {
public:
    ZeroSequence(int first_index, std::vector<Complex> entries);

    int first_index() const { return first_; }
    int last_index() const { return first_ + int(entries_.size()) - 1; }
    std::size_t size() const { return entries_.size(); }
    Complex at(int n) const;
    const std::vector<Complex>& entries() const { return entries_; }

    ZeroSequence truncated(int n_hi) const;  // keep indices <= n_hi
    ZeroSequence from_index(int n_lo) const; // keep indices >= n_lo

private:
    int first_;
    std::vector<Complex> entries_;
};

struct ResidualReport {
    int first_index = 1;
    std::vector<Complex> kappa;       // ϰ_n = μ_n^N (z_n - z_n⁰)
    double l2_norm = 0.0;
    std::vector<double> tail_profile; // [i] = Σ over entries after position i
};

ResidualReport residuals(const ZeroSequence& zeros, const MainPart& main);

} // namespace sinetype
