#pragma once

/*
 * winding.hpp — argument-principle zero counting on rectangles.
 *
 * The count is the total phase change of f around the boundary divided by
 * 2π, tracked segment by segment; any segment whose phase increment reaches
 * π/2 is bisected until increments are safely small.  No derivative of f is
 * used.  Counts are integer-exact for analytic f with no boundary zeros.
 *
 * Bisection only sees phase increments modulo 2π, so initial samples must
 * already sit closer than half a turn apart.  Callers who know a bound on
 * the phase speed of f (rad per unit of arc length; for exponential type b
 * with a degree-N factor, 2(b + N) is safely above it) pass it as
 * max_phase_speed and the boundary is pre-sampled at four points per
 * potential turn.  The default only guards rectangles a few turns around.
 */

#include <functional>

#include "sinetype/sinc.hpp"

namespace sinetype {

struct Rect {
    Complex lo; // bottom-left
    Complex hi; // top-right

    Rect(Complex lo_, Complex hi_) : lo(lo_), hi(hi_) {
        if (!(hi.real() > lo.real()) || !(hi.imag() > lo.imag()))
            throw std::invalid_argument("rectangle must have positive width and height");
    }
    static Rect centered(Complex c, double half_w, double half_h) {
        return Rect(c - Complex(half_w, half_h), c + Complex(half_w, half_h));
    }

    double width() const { return hi.real() - lo.real(); }
    double height() const { return hi.imag() - lo.imag(); }
    Complex center() const { return 0.5 * (lo + hi); }
    bool contains(Complex z) const {
        return z.real() > lo.real() && z.real() < hi.real() && z.imag() > lo.imag() &&
               z.imag() < hi.imag();
    }
    Rect dilated(double factor) const {
        Complex c = center();
        return Rect(c + factor * (lo - c), c + factor * (hi - c));
    }
};

using Evaluator1 = std::function<Complex(Complex)>;

struct WindingStats {
    int count = 0;
    double min_abs = 0.0; // smallest |f| met on the boundary
    long evaluations = 0;
};

// Throws BoundaryTooClose when the boundary passes within 1e-12 of a zero
// relative to the largest boundary sample, NoConvergence when bisection
// cannot tame the phase increments.
WindingStats winding_count_stats(const Evaluator1& f, const Rect& rect,
                                 double max_phase_speed = 0.0);

inline int winding_count(const Evaluator1& f, const Rect& rect, double max_phase_speed = 0.0) {
    return winding_count_stats(f, rect, max_phase_speed).count;
}

// Retries a failed boundary by dilating the rectangle by 1.7% up to
// `retries` times.  The rectangle actually counted is written back so
// callers reason about the same region.
WindingStats winding_count_dilating(const Evaluator1& f, Rect& rect, int retries = 3,
                                    double max_phase_speed = 0.0);

} // namespace sinetype
