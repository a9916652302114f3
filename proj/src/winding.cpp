#include "sinetype/winding.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "sinetype/errors.hpp"

namespace sinetype {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kTwoPi = 6.283185307179586;
constexpr int kInitialPerEdge = 16;
constexpr int kMaxDepth = 48;
constexpr long kMaxEvals = 4'000'000;

struct Tracker {
    const Evaluator1& f;
    double total = 0.0;      // accumulated phase
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    long evals = 0;

    explicit Tracker(const Evaluator1& fn) : f(fn) {}

    Complex sample(Complex z) {
        if (++evals > kMaxEvals)
            throw NoConvergence("winding boundary refinement exceeded evaluation budget");
        Complex v = f(z);
        double a = std::abs(v);
        if (a == 0.0 || !std::isfinite(a))
            throw BoundaryTooClose("boundary sample vanished or overflowed");
        min_abs = std::min(min_abs, a);
        max_abs = std::max(max_abs, a);
        return v;
    }

    // phase change along the segment [za, zb], bisecting while increments
    // are >= π/2
    void segment(Complex za, Complex fa, Complex zb, Complex fb, int depth) {
        double d = std::arg(fb / fa);
        if (std::abs(d) < kHalfPi) {
            total += d;
            return;
        }
        if (depth >= kMaxDepth) {
            // increments that never settle usually mean the contour runs
            // through a zero; report that retryably
            if (min_abs < 1e-9 * max_abs)
                throw BoundaryTooClose("bisection dived toward a zero on the contour");
            throw NoConvergence("phase increment did not settle under bisection");
        }
        Complex zm = 0.5 * (za + zb);
        Complex fm = sample(zm);
        segment(za, fa, zm, fm, depth + 1);
        segment(zm, fm, zb, fb, depth + 1);
    }
};

} // namespace

WindingStats winding_count_stats(const Evaluator1& f, const Rect& rect,
                                 double max_phase_speed) {
    const Complex c00 = rect.lo;
    const Complex c10(rect.hi.real(), rect.lo.imag());
    const Complex c11 = rect.hi;
    const Complex c01(rect.lo.real(), rect.hi.imag());
    const Complex corners[5] = {c00, c10, c11, c01, c00};

    Tracker tr(f);
    // initial nodes per edge, then adaptive bisection between neighbors;
    // a known phase-speed bound forces at least four samples per turn, which
    // bisection alone cannot guarantee (increments alias modulo 2π)
    std::vector<Complex> zs, fs;
    for (int e = 0; e < 4; ++e) {
        int nodes = kInitialPerEdge;
        if (max_phase_speed > 0.0) {
            double len = std::abs(corners[e + 1] - corners[e]);
            double needed = std::ceil(len * max_phase_speed / kHalfPi) + 1.0;
            nodes = std::max(nodes, int(std::min(needed, 1e6)));
        }
        for (int i = 0; i < nodes; ++i) {
            double t = double(i) / double(nodes);
            Complex z = corners[e] + t * (corners[e + 1] - corners[e]);
            zs.push_back(z);
            fs.push_back(tr.sample(z));
        }
    }
    zs.push_back(corners[0]);
    fs.push_back(fs.front());

    for (std::size_t i = 0; i + 1 < zs.size(); ++i)
        tr.segment(zs[i], fs[i], zs[i + 1], fs[i + 1], 0);

    if (tr.min_abs < 1e-12 * tr.max_abs)
        throw BoundaryTooClose("zero within rounding distance of the contour");

    double turns = tr.total / kTwoPi;
    int count = int(std::lround(turns));
    if (std::abs(turns - double(count)) > 0.25)
        throw NoConvergence("winding number did not round to an integer");
    if (count < 0)
        throw NoConvergence("negative winding count for an analytic function");

    WindingStats st;
    st.count = count;
    st.min_abs = tr.min_abs;
    st.evaluations = tr.evals;
    return st;
}

WindingStats winding_count_dilating(const Evaluator1& f, Rect& rect, int retries,
                                    double max_phase_speed) {
    Rect r = rect;
    for (int attempt = 0;; ++attempt) {
        try {
            WindingStats st = winding_count_stats(f, r, max_phase_speed);
            rect = r;
            return st;
        } catch (const BoundaryTooClose&) {
            if (attempt >= retries) throw;
            r = r.dilated(1.017);
        }
    }
}

} // namespace sinetype
