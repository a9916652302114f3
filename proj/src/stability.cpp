#include "sinetype/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sinetype/errors.hpp"
#include "sinetype/moments.hpp"
#include "sinetype/parallel.hpp"
#include "sinetype/quadrature.hpp"
#include "sinetype/rng.hpp"

namespace sinetype {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kDropDenominator = 1e-14;

} // namespace

// ── random sequences ────────────────────────────────────────────────────────

ZeroSequence sample_ball(const BallSpec& spec, const MainPart& main, std::uint64_t seed) {
    if (spec.r < 0.0) throw std::invalid_argument("sample_ball: r must be nonnegative");
    if (spec.n_max < 1) throw std::invalid_argument("sample_ball: n_max must be >= 1");

    const int first = main.first_index();
    const int count = spec.n_max - first + 1;
    Rng rng(seed);

    // envelope keeps high-index residuals small so the sum converges visibly
    std::vector<Complex> kappa(count);
    double norm2 = 0.0;
    for (int i = 0; i < count; ++i) {
        double env = std::pow(double(i + 1), -spec.decay_exponent);
        kappa[i] = env * rng.unit_disk();
        norm2 += std::norm(kappa[i]);
    }
    double u = 1.0 - rng.uniform(); // (0, 1]: never collapses both draws to one point
    double scale = norm2 > 0.0 ? spec.r * u / std::sqrt(norm2) : 0.0;

    const int degree = main.degree();
    std::vector<Complex> pts(count);
    for (int i = 0; i < count; ++i) {
        Complex weight = detail::ipow(main.mu(first + i), degree);
        pts[i] = main.lattice_point(first + i) + scale * kappa[i] / weight;
    }
    return ZeroSequence(first, std::move(pts));
}

// ── ratio of tail distance to zero distance ─────────────────────────────────

std::optional<StabilityRecord> stability_ratio(const ZeroSequence& a, const ZeroSequence& b,
                                               const MainPart& main, int num_modes,
                                               std::uint64_t seed_a, std::uint64_t seed_b) {
    if (a.first_index() != b.first_index() || a.last_index() != b.last_index())
        throw std::invalid_argument("stability_ratio: sequences must cover the same indices");

    ResidualReport ra = residuals(a, main);
    ResidualReport rb = residuals(b, main);
    double denom2 = 0.0;
    for (std::size_t i = 0; i < ra.kappa.size(); ++i)
        denom2 += std::norm(ra.kappa[i] - rb.kappa[i]);
    double denominator = std::sqrt(denom2);
    if (denominator < kDropDenominator) return std::nullopt;

    InversionResult wa = invert_to_tail(build_moment_system(a, main, num_modes));
    InversionResult wb = invert_to_tail(build_moment_system(b, main, num_modes));
    double diff2 = 0.0;
    for (int k = -num_modes; k <= num_modes; ++k)
        diff2 += std::norm(wa.tail.mode(k) - wb.tail.mode(k));
    double numerator = std::sqrt(2.0 * main.base().type() * diff2);

    StabilityRecord rec;
    rec.seed_a = seed_a;
    rec.seed_b = seed_b;
    rec.numerator = numerator;
    rec.denominator = denominator;
    rec.ratio = numerator / denominator;
    return rec;
}

LipschitzEstimate empirical_lipschitz(const BallSpec& spec, int trials, std::uint64_t seed,
                                      const MainPart& main, int num_modes) {
    if (trials < 1) throw std::invalid_argument("empirical_lipschitz: trials must be >= 1");

    std::vector<std::optional<StabilityRecord>> slots(trials);
    parallel_for(trials, [&](int t) {
        std::uint64_t sa = mix_seed(seed, 2 * std::uint64_t(t));
        std::uint64_t sb = mix_seed(seed, 2 * std::uint64_t(t) + 1);
        ZeroSequence za = sample_ball(spec, main, sa);
        ZeroSequence zb = sample_ball(spec, main, sb);
        auto rec = stability_ratio(za, zb, main, num_modes, sa, sb);
        if (rec) rec->r = spec.r;
        slots[t] = rec;
    });

    LipschitzEstimate est;
    est.r = spec.r;
    est.trials = trials;
    double sum = 0.0, sum2 = 0.0;
    for (const auto& slot : slots) {
        if (!slot) continue;
        est.records.push_back(*slot);
        est.c_r_est = std::max(est.c_r_est, slot->ratio);
        sum += slot->ratio;
        sum2 += slot->ratio * slot->ratio;
    }
    const double kept = double(est.records.size());
    if (kept > 0.0) est.mean = sum / kept;
    if (kept > 1.0)
        est.stddev = std::sqrt(std::max(0.0, (sum2 - kept * est.mean * est.mean) / (kept - 1.0)));
    return est;
}

// ── Plancherel identity for the tail transform ──────────────────────────────
//
// F(t) = ∫ w e^{itx} dx factors as sin(bt)·R(t) with R(t) = Σ d_k/(t + πk/b),
// d_k = 2(-1)^k c_k.  Quadrature covers [-Z, Z]; beyond Z the non-oscillatory
// half of sin² contributes exactly ½∫|R|² (rational, integrated in closed
// form) and the cos(2bt) half is bounded by integration by parts:
//
//   |∫_{|t|>Z} cos(2bt)|R|² dt| ≤ 2 D² / (b (Z-a)²),  D = Σ|d_k|, a = πM/b.

namespace {

struct RationalProfile {
    std::vector<Complex> d; // index k + M
    std::vector<double> x;  // pole offsets πk/b
    double D = 0.0;         // Σ|d_k|
    double a = 0.0;         // max |x_k|
};

RationalProfile rational_profile(const FourierTail& tail) {
    RationalProfile p;
    const int M = tail.cutoff();
    const double b = tail.type();
    p.d.resize(2 * M + 1);
    p.x.resize(2 * M + 1);
    for (int k = -M; k <= M; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        p.d[k + M] = 2.0 * sign * tail.mode(k);
        p.x[k + M] = kPi * k / b;
        p.D += std::abs(p.d[k + M]);
    }
    p.a = kPi * M / b;
    return p;
}

// ∫_{|x|>Z} dx / ((x + x_k + iy)(x + x_l - iy)) weighted by d_k conj(d_l).
// Z is kept far enough out that every log ratio stays near 1, so principal
// logs are the continuous antiderivative.
double rational_outer_integral(const RationalProfile& p, double Z, double y) {
    Complex total = 0.0;
    const int n = int(p.d.size());
    for (int k = 0; k < n; ++k) {
        if (p.d[k] == 0.0) continue;
        for (int l = 0; l < n; ++l) {
            if (p.d[l] == 0.0) continue;
            Complex A(p.x[k], y);
            Complex C(p.x[l], -y);
            Complex J;
            if (std::abs(C - A) == 0.0) {
                J = 1.0 / (Z + A) + 1.0 / (Z - A);
            } else {
                J = (std::log((-Z + A) / (-Z + C)) - std::log((Z + A) / (Z + C))) / (C - A);
            }
            total += p.d[k] * std::conj(p.d[l]) * J;
        }
    }
    return total.real();
}

// window such that the dropped oscillatory part is below abs_tol and the
// principal-log formula above is valid
double pick_window(const RationalProfile& p, double b, double y, double abs_tol) {
    double Z = p.a + std::sqrt(2.0 * p.D * p.D / (b * abs_tol));
    Z = std::max(Z, p.a + 1.0 + 4.0 * (2.0 * p.a + 2.0 * std::abs(y)));
    Z = std::max(Z, p.a + 10.0 * kPi / b);
    return Z;
}

} // namespace

ParsevalReport parseval_l2(const FourierTail& tail, double rel_tol) {
    if (rel_tol <= 0.0) throw std::invalid_argument("parseval_l2: rel_tol must be positive");
    ParsevalReport report;
    const double b = tail.type();
    const double norm = tail.l2_norm();
    report.freq_side = 2.0 * kPi * norm * norm;
    if (tail.is_zero()) return report;

    RationalProfile prof = rational_profile(tail);
    double Z = pick_window(prof, b, 0.0, 0.25 * rel_tol * report.freq_side);
    if (Z > 1e7) throw QuadratureTailTooLarge("parseval_l2: window " + std::to_string(Z));
    report.window = Z;

    // panel = quarter oscillation of |F|²; order-8 Gauss is exact to spare
    int panels = int(std::ceil(4.0 * Z * b / kPi));
    double inner = integrate_real([&](double t) { return std::norm(tail.eval(Complex(t, 0.0))); },
                                  -Z, Z, panels);
    report.time_side = inner + 0.5 * rational_outer_integral(prof, Z, 0.0);
    return report;
}

LineShiftReport line_shift_check(const FourierTail& tail, double y) {
    LineShiftReport report;
    report.y = y;
    ParsevalReport base = parseval_l2(tail);
    report.bound = std::exp(2.0 * tail.type() * std::abs(y)) * base.time_side;
    if (tail.is_zero()) return report;
    if (y == 0.0) {
        report.shifted_norm = base.time_side;
        return report;
    }

    const double b = tail.type();
    RationalProfile prof = rational_profile(tail);
    double Z = pick_window(prof, b, y, 0.25 * 1e-6 * base.freq_side);
    if (Z > 1e7) throw QuadratureTailTooLarge("line_shift_check: window " + std::to_string(Z));

    int panels = int(std::ceil(4.0 * Z * b / kPi));
    double inner = integrate_real([&](double t) { return std::norm(tail.eval(Complex(t, y))); },
                                  -Z, Z, panels);
    // |sin(b(x+iy))|² = (cosh(2by) - cos(2bx))/2; only the cosh half survives
    // the certified truncation
    report.shifted_norm =
        inner + 0.5 * std::cosh(2.0 * b * y) * rational_outer_integral(prof, Z, y);
    return report;
}

// ── square-summability of tail samples near the lattice ─────────────────────

Lemma1Report lemma1_check(const ThetaFunction& theta, const std::vector<Complex>& shifts,
                          int n_max) {
    if (n_max < 1) throw std::invalid_argument("lemma1_check: n_max must be >= 1");
    if (int(shifts.size()) < n_max)
        throw std::invalid_argument("lemma1_check: need a shift per sampled index");

    const FourierTail& tail = theta.tail();
    const MainPart& main = theta.main();
    const double b = main.base().type();

    Lemma1Report report;
    report.partial_sums.resize(n_max);
    double running = 0.0;
    double shift_sup2 = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        Complex z = main.lattice_point(n) + shifts[n - 1];
        running += std::norm(tail.eval(z));
        report.partial_sums[n - 1] = running;
        shift_sup2 = std::max(shift_sup2, std::norm(shifts[n - 1]));
    }

    // upper frame constant of the lattice exponentials against the modes,
    // recovered from the moment matrix on exact lattice points
    const int M = tail.cutoff();
    const int rows = std::max(2 * M + 1, std::min(n_max, 256));
    std::vector<Complex> lattice(rows);
    for (int n = 1; n <= rows; ++n) lattice[n - 1] = main.lattice_point(n);
    FrameEstimate frame =
        frame_bounds_estimate(build_moment_system(ZeroSequence(1, std::move(lattice)), main, M));
    const double frame_upper = 2.0 * b * frame.M_est;

    const double w2 = tail.l2_norm() * tail.l2_norm();
    report.bound = std::exp(shift_sup2) * frame_upper * std::exp(b * b) * w2;
    return report;
}

} // namespace sinetype
