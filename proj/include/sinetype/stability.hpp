#pragma once

/*
 * stability.hpp — perturbation experiments around a main part.
 *
 * sample_ball draws a zero sequence whose residuals form a random vector of
 * prescribed l2 norm; stability_ratio compares the recovered tails of two
 * such sequences against the distance between the sequences themselves, and
 * empirical_lipschitz aggregates many trials into a worst-case ratio.
 *
 * parseval_l2 / line_shift_check / lemma1_check probe the analytic facts the
 * ratio experiments rely on: the Fourier integral is an isometry up to 2*pi,
 * horizontal line shifts cost at most e^{2b|y|}, and sampling a tail near the
 * lattice is square-summable with an explicit constant.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "sinetype/model.hpp"

namespace sinetype {

struct BallSpec {
    double r = 1.0;             // target residual norm scale
    int n_max = 200;            // entries cover 1-N .. n_max
    double decay_exponent = 1.0; // envelope |kappa_p| <= p^{-decay_exponent}
};

// Random sequence z_n = z_n^0 + kappa_n / mu_n^N with ||kappa|| = r*u,
// u uniform in (0, 1]; the draw depends only on spec and seed.
ZeroSequence sample_ball(const BallSpec& spec, const MainPart& main,
                         std::uint64_t seed);

struct StabilityRecord {
    std::uint64_t seed_a = 0;
    std::uint64_t seed_b = 0;
    double r = 0.0;
    double numerator = 0.0;   // || w_a - w_b || over the recovered tails
    double denominator = 0.0; // || mu^N (a_n - b_n) ||
    double ratio = 0.0;
};

// Recover tails of both sequences through the moment system and form the
// quotient; trials whose sequences nearly coincide are dropped.
std::optional<StabilityRecord> stability_ratio(const ZeroSequence& a,
                                               const ZeroSequence& b,
                                               const MainPart& main, int num_modes,
                                               std::uint64_t seed_a,
                                               std::uint64_t seed_b);

struct LipschitzEstimate {
    double r = 0.0;
    int trials = 0;
    double c_r_est = 0.0; // max observed ratio
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<StabilityRecord> records; // kept trials, in trial order
};

LipschitzEstimate empirical_lipschitz(const BallSpec& spec, int trials,
                                      std::uint64_t seed, const MainPart& main,
                                      int num_modes);

struct ParsevalReport {
    double time_side = 0.0; // integral of |F|^2 over the real line
    double freq_side = 0.0; // 2*pi*||w||^2
    double window = 0.0;    // half-width actually integrated by quadrature
};

// Checks that the Fourier transform of the tail profile satisfies the
// Plancherel identity; the truncated part of the integral is certified
// against rel_tol * freq_side.
ParsevalReport parseval_l2(const FourierTail& tail, double rel_tol = 1e-6);

struct LineShiftReport {
    double y = 0.0;
    double shifted_norm = 0.0; // integral of |F(x+iy)|^2 dx
    double bound = 0.0;        // e^{2b|y|} * integral on the real axis
};

LineShiftReport line_shift_check(const FourierTail& tail, double y);

struct Lemma1Report {
    std::vector<double> partial_sums; // sum_{n<=j} |F(z_n^0 + alpha_n)|^2
    double bound = 0.0;
};

// Samples the tail of theta at boundedly shifted lattice points; the partial
// sums must stay below an explicit multiple of ||w||^2.
Lemma1Report lemma1_check(const ThetaFunction& theta,
                          const std::vector<Complex>& shifts, int n_max);

} // namespace sinetype
