#include "sinetype/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "sinetype/errors.hpp"
#include "sinetype/parallel.hpp"

namespace sinetype {

namespace {

constexpr int kNewtonMaxIters = 60;
constexpr int kMaxSubdivisionDepth = 80;
const double kInf = std::numeric_limits<double>::infinity();

// boundary margins get a faintly irrational factor so lattice-aligned
// rectangles do not land their edges exactly on zeros
constexpr double kEdgeDodge = 1.003717;

Complex fd_derivative(const Evaluator1& f, Complex z, double scale) {
    double h = 1e-7 * std::max(1.0, scale);
    return (f(z + Complex(h, 0.0)) - f(z - Complex(h, 0.0))) / (2.0 * h);
}

std::optional<RefineResult> newton_only(const Evaluator1& f, const Evaluator1& df, Complex z0,
                                        double R) {
    Complex z = z0;
    double best = kInf;
    int stall = 0, clamp_streak = 0;
    for (int iter = 0; iter < kNewtonMaxIters; ++iter) {
        Complex fv = f(z);
        Complex fd = df ? df(z) : fd_derivative(f, z, std::abs(z0) + R);
        double tol = 1e-12 * std::max(1.0, std::abs(fd) * R);
        if (std::abs(fv) < tol) return RefineResult{z, iter};
        if (!(std::abs(fd) > 0.0) || !std::isfinite(std::abs(fd))) return std::nullopt;
        Complex cand = z - fv / fd;
        double d = std::abs(cand - z0);
        if (d > R) {
            cand = z0 + (cand - z0) * (0.98 * R / d);
            if (++clamp_streak >= 6) return std::nullopt; // pinned at the boundary
        } else {
            clamp_streak = 0;
        }
        if (std::abs(fv) > 0.5 * best) {
            if (++stall >= 10) return std::nullopt;
        } else {
            stall = 0;
        }
        best = std::min(best, std::abs(fv));
        z = cand;
    }
    return std::nullopt;
}

struct ExtractCtx {
    const Evaluator1& f;
    const Evaluator1& df;
    double cluster_tol;
    double phase_speed;
};

void collect(const ExtractCtx& ctx, const Rect& r, int depth, std::vector<Complex>& out) {
    // BoundaryTooClose propagates so the caller can re-split
    WindingStats st = winding_count_stats(ctx.f, r, ctx.phase_speed);
    if (st.count == 0) return;
    const double dim = std::max(r.width(), r.height());
    if (st.count == 1) {
        auto rr = newton_only(ctx.f, ctx.df, r.center(), 0.75 * std::hypot(r.width(), r.height()));
        if (rr && r.contains(rr->z)) {
            out.push_back(rr->z);
            return;
        }
        if (dim < ctx.cluster_tol || depth >= kMaxSubdivisionDepth) {
            out.push_back(r.center());
            return;
        }
    } else if (dim < ctx.cluster_tol || depth >= kMaxSubdivisionDepth) {
        for (int i = 0; i < st.count; ++i) out.push_back(r.center());
        return;
    }
    // split the longer side; jitter the split line off any zero sitting on it
    static const double kFractions[5] = {0.5, 0.531, 0.469, 0.557, 0.443};
    const bool split_x = r.width() >= r.height();
    for (double t : kFractions) {
        Rect a = r, b = r;
        if (split_x) {
            double xm = r.lo.real() + t * r.width();
            a = Rect(r.lo, Complex(xm, r.hi.imag()));
            b = Rect(Complex(xm, r.lo.imag()), r.hi);
        } else {
            double ym = r.lo.imag() + t * r.height();
            a = Rect(r.lo, Complex(r.hi.real(), ym));
            b = Rect(Complex(r.lo.real(), ym), r.hi);
        }
        std::vector<Complex> tmp;
        try {
            collect(ctx, a, depth + 1, tmp);
            collect(ctx, b, depth + 1, tmp);
        } catch (const BoundaryTooClose&) {
            continue;
        }
        out.insert(out.end(), tmp.begin(), tmp.end());
        return;
    }
    throw BoundaryTooClose("no clean split line found inside the rectangle");
}

bool disk_meets_rect(Complex c, double radius, const Rect& r) {
    double x = std::clamp(c.real(), r.lo.real(), r.hi.real());
    double y = std::clamp(c.imag(), r.lo.imag(), r.hi.imag());
    return std::abs(c - Complex(x, y)) <= radius;
}

} // namespace

RefineResult refine_zero_stats(const Evaluator1& f, const Evaluator1& df, Complex z0,
                               double trust_radius) {
    if (!(trust_radius > 0.0)) throw std::invalid_argument("trust radius must be positive");
    if (auto rr = newton_only(f, df, z0, trust_radius)) return *rr;
    // stalled: certify the disk really holds a zero, then subdivide for it
    Rect sq = Rect::centered(z0, trust_radius, trust_radius);
    WindingStats st = winding_count_dilating(f, sq);
    if (st.count == 0) throw LeftTrustRegion("no zero inside the trust disk");
    std::vector<Complex> zs = extract_zeros_in_rect(f, df, sq);
    Complex bestz;
    double bestd = kInf;
    for (Complex z : zs) {
        double d = std::abs(z - z0);
        if (d <= trust_radius * 1.001 && d < bestd) {
            bestd = d;
            bestz = z;
        }
    }
    if (!(bestd < kInf)) throw LeftTrustRegion("zeros found only outside the trust disk");
    Complex fv = f(bestz);
    Complex fd = df ? df(bestz) : fd_derivative(f, bestz, std::abs(z0) + trust_radius);
    if (std::abs(fv) > 1e-9 * std::max(1.0, std::abs(fd) * trust_radius))
        throw MaxIterations("refinement stalled away from tolerance");
    return RefineResult{bestz, kNewtonMaxIters};
}

Complex refine_zero(const ThetaFunction& theta, Complex z0, double trust_radius) {
    auto f = [&theta](Complex z) { return theta.eval(z); };
    auto df = [&theta](Complex z) { return theta.eval(z, 1); };
    return refine_zero_stats(f, df, z0, trust_radius).z;
}

std::vector<Complex> extract_zeros_in_rect(const Evaluator1& f, const Evaluator1& df, Rect rect,
                                           double cluster_tol, double max_phase_speed) {
    ExtractCtx ctx{f, df, cluster_tol, max_phase_speed};
    std::vector<Complex> out;
    collect(ctx, rect, 0, out);
    // canonical order, then collapse clusters to multiple zeros
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<Complex> collapsed;
    std::size_t i = 0;
    while (i < out.size()) {
        std::size_t j = i + 1;
        Complex sum = out[i];
        while (j < out.size() && std::abs(out[j] - out[j - 1]) < cluster_tol) {
            sum += out[j];
            ++j;
        }
        Complex rep = sum / double(j - i);
        for (std::size_t k = i; k < j; ++k) collapsed.push_back(rep);
        i = j;
    }
    return collapsed;
}

LocalizationReport localize_zeros(const ThetaFunction& theta, int n_max) {
    const MainPart& main = theta.main();
    const int N = main.degree();
    const int first = 1 - N;
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");

    const double sep = main.base().separation();
    const double delta = sep / 3.0; // trust radius
    // phase speed of θ along any line stays below type + poly contribution
    const double speed = 2.0 * (main.base().type() + double(N));
    const std::size_t count = std::size_t(n_max - first + 1);

    std::vector<Complex> P(count);
    for (std::size_t i = 0; i < count; ++i) P[i] = main.lattice_point(first + int(i));

    auto theta_ev = [&theta](Complex z) { return theta.eval(z); };
    auto dtheta_ev = [&theta](Complex z) { return theta.eval(z, 1); };

    // conflict scan: lattice points closer than 2δ share a head region
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (P[a].real() != P[b].real()) return P[a].real() < P[b].real();
        return P[a].imag() < P[b].imag();
    });
    std::vector<char> in_head(count, 0);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count; ++b) {
            if (P[order[b]].real() - P[order[a]].real() >= 2.0 * delta) break;
            if (std::abs(P[order[a]] - P[order[b]]) < 2.0 * delta)
                in_head[order[a]] = in_head[order[b]] = 1;
        }
    }

    std::optional<Rect> head;
    auto rebuild_head = [&] {
        double xlo = kInf, xhi = -kInf, ylo = kInf, yhi = -kInf;
        for (std::size_t i = 0; i < count; ++i) {
            if (!in_head[i]) continue;
            xlo = std::min(xlo, P[i].real());
            xhi = std::max(xhi, P[i].real());
            ylo = std::min(ylo, P[i].imag());
            yhi = std::max(yhi, P[i].imag());
        }
        // margin = one trust radius: wide enough for in-class displacements,
        // narrow enough that a 3δ-spaced neighbor's disk stays clear
        const double m = delta * kEdgeDodge;
        xlo -= m, ylo -= m, xhi += m, yhi += m;
        if (head) { // growth is monotone: extent certified by dilation is kept
            xlo = std::min(xlo, head->lo.real());
            ylo = std::min(ylo, head->lo.imag());
            xhi = std::max(xhi, head->hi.real());
            yhi = std::max(yhi, head->hi.imag());
        }
        head = Rect(Complex(xlo, ylo), Complex(xhi, yhi));
    };
    auto absorb = [&]() -> bool {
        if (!head) return false;
        bool changed = false;
        for (std::size_t i = 0; i < count; ++i) {
            if (in_head[i]) continue;
            if (disk_meets_rect(P[i], delta, *head)) {
                in_head[i] = 1;
                changed = true;
            }
        }
        if (changed) rebuild_head();
        return changed;
    };

    bool have_head = std::any_of(in_head.begin(), in_head.end(), [](char c) { return c != 0; });
    if (have_head) {
        rebuild_head();
        while (absorb()) {}
    }

    std::vector<Complex> entries(count);
    std::vector<int> iters(count, -1);
    double clearance = kInf;

    if (have_head) {
        int grow_tries = 0;
        for (int guard = 0;; ++guard) {
            if (guard > 24) throw CountMismatch("head rectangle did not stabilize");
            WindingStats st = winding_count_dilating(theta_ev, *head, 3, speed);
            clearance = std::min(clearance, st.min_abs);
            if (absorb()) continue; // rectangle moved; recount
            int expected = int(std::count(in_head.begin(), in_head.end(), char(1)));
            if (st.count == expected) break;
            if (++grow_tries > 5)
                throw CountMismatch("head winding count " + std::to_string(st.count) +
                                    " never matched lattice count " + std::to_string(expected));
            head = head->dilated(1.5);
            while (absorb()) {}
        }

        std::vector<Complex> head_zeros =
            extract_zeros_in_rect(theta_ev, dtheta_ev, *head, 1e-7, speed);
        std::vector<std::size_t> head_idx;
        for (std::size_t i = 0; i < count; ++i)
            if (in_head[i]) head_idx.push_back(i);
        if (head_zeros.size() != head_idx.size())
            throw CountMismatch("head extraction returned " + std::to_string(head_zeros.size()) +
                                " zeros for " + std::to_string(head_idx.size()) + " lattice points");

        // greedy distance assignment of head zeros to head lattice indices
        struct Pair {
            double d;
            std::size_t zi, li;
        };
        std::vector<Pair> pairs;
        for (std::size_t zi = 0; zi < head_zeros.size(); ++zi)
            for (std::size_t li = 0; li < head_idx.size(); ++li)
                pairs.push_back({std::abs(head_zeros[zi] - P[head_idx[li]]), zi, li});
        std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
            if (a.d != b.d) return a.d < b.d;
            if (a.zi != b.zi) return a.zi < b.zi;
            return a.li < b.li;
        });
        std::vector<char> ztaken(head_zeros.size(), 0), ltaken(head_idx.size(), 0);
        for (const Pair& p : pairs) {
            if (ztaken[p.zi] || ltaken[p.li]) continue;
            ztaken[p.zi] = ltaken[p.li] = 1;
            entries[head_idx[p.li]] = head_zeros[p.zi];
        }
    }

    // disjoint trust disks, refined independently
    std::vector<std::size_t> tail_idx;
    for (std::size_t i = 0; i < count; ++i)
        if (!in_head[i]) tail_idx.push_back(i);
    std::vector<double> disk_clearance(count, kInf);
    parallel_for(tail_idx.size(), [&](std::size_t t) {
        std::size_t i = tail_idx[t];
        Rect sq = Rect::centered(P[i], delta, delta);
        WindingStats st = winding_count_dilating(theta_ev, sq, 3, speed);
        disk_clearance[i] = st.min_abs;
        if (st.count != 1)
            throw CountMismatch("trust disk at lattice index " + std::to_string(first + int(i)) +
                                " holds " + std::to_string(st.count) + " zeros");
        RefineResult rr = refine_zero_stats(theta_ev, dtheta_ev, P[i], 1.45 * delta);
        entries[i] = rr.z;
        iters[i] = rr.iterations;
    });
    for (double c : disk_clearance) clearance = std::min(clearance, c);

    LocalizationReport rep{ZeroSequence(first, std::move(entries)),
                           int(std::count(in_head.begin(), in_head.end(), char(1))), std::move(iters),
                           clearance};
    return rep;
}

} // namespace sinetype
