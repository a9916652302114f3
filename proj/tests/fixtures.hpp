#pragma once

/*
 * fixtures.hpp — shared builders for the unit suites.
 *
 * Every random draw goes through sinetype::Rng with an explicit seed, so a
 * fixture is a pure function of its arguments and failures replay exactly.
 * The quadrature helpers integrate the tail transform directly from the mode
 * profile; they share no code with FourierTail::eval and serve as its oracle.
 */

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "sinetype/model.hpp"
#include "sinetype/quadrature.hpp"
#include "sinetype/rng.hpp"

namespace fixtures {

using sinetype::Complex;
using sinetype::FourierTail;
using sinetype::MainPart;
using sinetype::Rng;
using sinetype::SineTypeBase;
using sinetype::ThetaFunction;

inline double pi() { return SineTypeBase::pi(); }

// P ≡ 1 (N = 0) over sin(πz)
inline MainPart main_n0() {
    return MainPart(SineTypeBase::sin_scaled(pi()), {Complex(1.0)});
}

// P(z) = z (N = 1) over sin(πz)
inline MainPart main_n1() {
    return MainPart(SineTypeBase::sin_scaled(pi()), {Complex(0.0), Complex(1.0)});
}

inline MainPart profile_main(int N) { return N == 0 ? main_n0() : main_n1(); }

// Random tail with exactly the requested L2 norm; mode magnitudes decay
// like 1/(|k|+1) so fixtures resemble the class the estimates assume.
inline FourierTail random_tail(double b, int M, double norm, std::uint64_t seed) {
    Rng rng(seed);
    std::map<int, Complex> modes;
    double sum = 0.0;
    for (int k = -M; k <= M; ++k) {
        Complex c = rng.unit_disk() / double(std::abs(k) + 1);
        modes[k] = c;
        sum += std::norm(c);
    }
    if (sum == 0.0) return FourierTail::zero(b);
    const double scale = norm / std::sqrt(2.0 * b * sum);
    for (auto& [k, c] : modes) c *= scale;
    return FourierTail(b, M, modes);
}

// Same but real-valued w (c_{-k} = conj(c_k)), which keeps θ real on ℝ
// whenever the polynomial has real coefficients.
inline FourierTail random_real_tail(double b, int M, double norm, std::uint64_t seed) {
    Rng rng(seed);
    std::map<int, Complex> modes;
    double sum = 0.0;
    modes[0] = Complex(rng.uniform(-1.0, 1.0), 0.0);
    sum += std::norm(modes[0]);
    for (int k = 1; k <= M; ++k) {
        Complex c = rng.unit_disk() / double(k + 1);
        modes[k] = c;
        modes[-k] = std::conj(c);
        sum += 2.0 * std::norm(c);
    }
    if (sum == 0.0) return FourierTail::zero(b);
    const double scale = norm / std::sqrt(2.0 * b * sum);
    for (auto& [k, c] : modes) c *= scale;
    return FourierTail(b, M, modes);
}

inline ThetaFunction random_theta(int N, int M, double norm, std::uint64_t seed) {
    return ThetaFunction(profile_main(N), random_tail(pi(), M, norm, seed));
}

// ∫_{-b}^{b} w(x)·(ix)^ν·e^{izx} dx by Gauss–Legendre panels, straight from
// the mode sum; the panel count tracks the integrand's oscillation.
inline Complex tail_transform_quadrature(const FourierTail& tail, Complex z,
                                         int deriv_order = 0) {
    const double b = tail.type();
    const int M = tail.cutoff();
    auto w = [&](double x) {
        Complex acc = 0.0;
        for (int k = -M; k <= M; ++k)
            acc += tail.mode(k) * std::exp(Complex(0.0, pi() * k * x / b));
        return acc;
    };
    auto integrand = [&](double x) {
        Complex p = 1.0;
        for (int i = 0; i < deriv_order; ++i) p *= Complex(0.0, x);
        return w(x) * p * std::exp(Complex(0.0, 1.0) * z * x);
    };
    const int panels = 16 + int(b * (std::abs(z) + M) / 2.0);
    return sinetype::integrate_complex(integrand, -b, b, panels);
}

// ‖w‖²_{L₂(-b,b)} by quadrature on the mode sum.
inline double tail_norm_sq_quadrature(const FourierTail& tail) {
    const double b = tail.type();
    const int M = tail.cutoff();
    auto w = [&](double x) {
        Complex acc = 0.0;
        for (int k = -M; k <= M; ++k)
            acc += tail.mode(k) * std::exp(Complex(0.0, pi() * k * x / b));
        return acc;
    };
    const int panels = 8 + 2 * M;
    return sinetype::integrate_real([&](double x) { return std::norm(w(x)); }, -b, b, panels);
}

} // namespace fixtures
