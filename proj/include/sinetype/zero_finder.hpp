#pragma once

/*
 * zero_finder.hpp — locating all zeros of θ up to a lattice index.
 *
 * Strategy: lattice points whose trust disks (radius δ = separation/3) are
 * pairwise disjoint are handled one zero per disk — winding count certifies
 * "exactly one", Newton refines it.  Clustered lattice points (coincident or
 * closer than 2δ, e.g. a polynomial root sitting on a base zero) are covered
 * by a head rectangle whose winding count must equal the number of enclosed
 * lattice points; its zeros are extracted by rectangle subdivision.  Zeros
 * agreeing within 1e-7 are collapsed into one multiple zero (repeated
 * consecutive entries).
 */

#include <vector>

#include "sinetype/model.hpp"
#include "sinetype/winding.hpp"

namespace sinetype {

struct RefineResult {
    Complex z;
    int iterations = 0;
};

// Newton iteration from z0, steps clamped to |z - z0| <= trust_radius, with
// a winding-guided subdivision fallback when the iteration stalls.
// Requires exactly one simple zero in the trust disk (caller-established).
RefineResult refine_zero_stats(const Evaluator1& f, const Evaluator1& df, Complex z0,
                               double trust_radius);

Complex refine_zero(const ThetaFunction& theta, Complex z0, double trust_radius);

// All zeros of f strictly inside rect, with multiplicity, found by recursive
// winding subdivision.  df may be empty (finite differences are used).
// Clusters tighter than cluster_tol come back as repeated entries.
std::vector<Complex> extract_zeros_in_rect(const Evaluator1& f, const Evaluator1& df, Rect rect,
                                           double cluster_tol = 1e-7,
                                           double max_phase_speed = 0.0);

struct LocalizationReport {
    ZeroSequence zeros;
    int head_count = 0;                  // entries covered by the head rectangle
    std::vector<int> newton_iterations;  // per entry; -1 for head entries
    double min_boundary_clearance = 0.0; // smallest |θ| met on any contour
};

LocalizationReport localize_zeros(const ThetaFunction& theta, int n_max);

} // namespace sinetype
