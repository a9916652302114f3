#include "sinetype/completion.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>

#include "sinetype/errors.hpp"
#include "sinetype/zero_finder.hpp"

namespace sinetype {

namespace {

constexpr double kEdgeDodge = 1.003717;

// value of Π(1+u_n) - 1 accumulated without cancelling the leading 1
class ProductMinusOne {
public:
    void mul(Complex u) { d_ = d_ + u + d_ * u; }
    Complex value() const { return d_; }

private:
    Complex d_ = 0.0;
};

Complex poly_eval_coeffs(const std::vector<Complex>& c, Complex z, int deriv) {
    std::vector<Complex> cc = c;
    for (int d = 0; d < deriv; ++d) {
        if (cc.size() <= 1) return 0.0;
        for (std::size_t j = 1; j < cc.size(); ++j) cc[j - 1] = double(j) * cc[j];
        cc.pop_back();
    }
    Complex acc = 0.0;
    for (std::size_t j = cc.size(); j-- > 0;) acc = acc * z + cc[j];
    return acc;
}

// (P·S₀)^{(ν)} for ν <= 2
Complex poly_times_base(const std::vector<Complex>& p, const SineTypeBase& base, Complex z,
                        int nu) {
    switch (nu) {
        case 0: return poly_eval_coeffs(p, z, 0) * base.eval(z);
        case 1:
            return poly_eval_coeffs(p, z, 1) * base.eval(z) +
                   poly_eval_coeffs(p, z, 0) * base.eval(z, 1);
        default:
            return poly_eval_coeffs(p, z, 2) * base.eval(z) +
                   2.0 * poly_eval_coeffs(p, z, 1) * base.eval(z, 1) +
                   poly_eval_coeffs(p, z, 0) * base.eval(z, 2);
    }
}

} // namespace

ZeroSequence complete_zeros(const ZeroSequence& partial, const MainPart& main, int M) {
    if (partial.first_index() != 1)
        throw std::invalid_argument("partial sequence must start at index 1");
    const int N = main.degree();

    MomentSystem sys = build_moment_system(partial, main, M);
    InversionResult inv = invert_to_tail(sys);
    if (N == 0) return partial;

    ThetaFunction theta(main, inv.tail);
    auto f = [&theta](Complex z) { return theta.eval(z); };
    auto df = [&theta](Complex z) { return theta.eval(z, 1); };

    const double sep = main.base().separation();
    const double speed = 2.0 * (main.base().type() + double(N));
    double xlo = 0.0, xhi = 0.0, ylo = 0.0, yhi = 0.0;
    for (int n = main.first_index(); n <= 0; ++n) {
        Complex p = main.lattice_point(n);
        xlo = std::min(xlo, p.real());
        xhi = std::max(xhi, p.real());
        ylo = std::min(ylo, p.imag());
        yhi = std::max(yhi, p.imag());
    }
    const double m0 = 2.0 * sep * kEdgeDodge;
    Rect rect(Complex(xlo - m0, ylo - m0), Complex(xhi + m0, yhi + m0));

    std::vector<Complex> found;
    std::vector<int> known_inside;
    for (int attempt = 0;; ++attempt) {
        WindingStats st = winding_count_dilating(f, rect, 3, speed);
        known_inside.clear();
        for (int n = 1; n <= partial.last_index(); ++n)
            if (rect.contains(partial.at(n))) known_inside.push_back(n);
        if (st.count == int(known_inside.size()) + N) {
            found = extract_zeros_in_rect(f, df, rect, 1e-7, speed);
            if (int(found.size()) == st.count) break;
        }
        if (attempt >= 5)
            throw CountMismatch("head search saw " + std::to_string(st.count) + " zeros against " +
                                std::to_string(known_inside.size()) + " known plus N = " +
                                std::to_string(N));
        rect = rect.dilated(1.5);
    }

    // strip the zeros already present in the partial sequence
    std::vector<char> used(found.size(), 0);
    for (int n : known_inside) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0;
        for (std::size_t i = 0; i < found.size(); ++i) {
            if (used[i]) continue;
            double d = std::abs(found[i] - partial.at(n));
            if (d < best) {
                best = d;
                bi = i;
            }
        }
        if (!(best < sep / 10.0))
            throw CountMismatch("known zero at index " + std::to_string(n) +
                                " not matched by the recomputed head region");
        used[bi] = 1;
    }
    std::vector<Complex> head;
    for (std::size_t i = 0; i < found.size(); ++i)
        if (!used[i]) head.push_back(found[i]);
    if (int(head.size()) != N)
        throw CountMismatch("expected " + std::to_string(N) + " new head zeros, found " +
                            std::to_string(head.size()));

    // assign head zeros to indices 1-N..0 by distance to the polynomial roots
    std::vector<Complex> entries(std::size_t(N) + partial.size());
    struct Pair {
        double d;
        std::size_t zi, li;
    };
    std::vector<Pair> pairs;
    for (std::size_t zi = 0; zi < head.size(); ++zi)
        for (std::size_t li = 0; li < std::size_t(N); ++li)
            pairs.push_back({std::abs(head[zi] - main.lattice_point(main.first_index() + int(li))),
                             zi, li});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.d != b.d) return a.d < b.d;
        if (a.zi != b.zi) return a.zi < b.zi;
        return a.li < b.li;
    });
    std::vector<char> zt(head.size(), 0), lt(std::size_t(N), 0);
    for (const Pair& p : pairs) {
        if (zt[p.zi] || lt[p.li]) continue;
        zt[p.zi] = lt[p.li] = 1;
        entries[p.li] = head[p.zi];
    }
    for (std::size_t i = 0; i < partial.size(); ++i)
        entries[std::size_t(N) + i] = partial.entries()[i];
    return ZeroSequence(1 - N, std::move(entries));
}

Eq13Report verify_eq13(const std::vector<Complex>& arbitrary_head, const ZeroSequence& partial,
                       const MainPart& main, int M, double y0) {
    const int N = main.degree();
    if (int(arbitrary_head.size()) != N)
        throw std::invalid_argument("arbitrary head must hold exactly N values");
    if (partial.first_index() != 1)
        throw std::invalid_argument("partial sequence must start at index 1");
    if (!(y0 > 0.0)) throw std::invalid_argument("sampling base height must be positive");

    // g(iy) = (θ_arb - S)/S₀ = P_N(iy)·(Π - 1), by the zero-ratio identity
    auto g_at = [&](double y) {
        Complex z(0.0, y);
        ProductMinusOne pm;
        for (int n = main.first_index(); n <= 0; ++n) {
            Complex z0 = main.lattice_point(n);
            pm.mul((arbitrary_head[std::size_t(n - main.first_index())] - z0) / (z0 - z));
        }
        for (int n = 1; n <= partial.last_index(); ++n) {
            Complex z0 = main.lattice_point(n);
            pm.mul((partial.at(n) - z0) / (z0 - z));
        }
        return main.poly_eval(z) * pm.value();
    };

    std::vector<Complex> fitted(std::size_t(N), Complex(0.0));
    double poly_resid = 0.0;
    if (N > 0) {
        auto fit_at = [&](double base_height, std::vector<Complex>& coeffs) {
            const int samples = N + 3;
            Eigen::MatrixXcd A(samples, N);
            Eigen::VectorXcd rhs(samples);
            for (int j = 0; j < samples; ++j) {
                double y = base_height * std::ldexp(1.0, j);
                Complex iy(0.0, y);
                Complex p = 1.0;
                for (int m = 0; m < N; ++m) {
                    A(j, m) = p;
                    p *= iy;
                }
                rhs(j) = g_at(y);
            }
            Eigen::VectorXcd c = A.colPivHouseholderQr().solve(rhs);
            coeffs.assign(std::size_t(N), Complex(0.0));
            for (int m = 0; m < N; ++m) coeffs[std::size_t(m)] = c(m);
            return (A * c - rhs).norm();
        };
        poly_resid = fit_at(y0, fitted);
        std::vector<Complex> again;
        double check = fit_at(2.0 * y0, again);
        if (check > 1.5 * poly_resid + 1e-12)
            throw FitDiverged("polynomial fit residual grows with the sampling height");
    }

    // tail from the moment system with the fitted correction on the rhs
    MomentSystem sys = build_moment_system(partial, main, M);
    if (N > 0) {
        int row = 0;
        for (const MomentNode& node : sys.nodes)
            for (int nu = 0; nu < node.multiplicity; ++nu, ++row)
                sys.rhs(row) -= poly_times_base(fitted, main.base(), node.z, nu);
    }
    InversionResult inv = invert_to_tail(sys);

    Eq13Report rep{std::move(fitted), inv.tail,
                   std::sqrt(poly_resid * poly_resid + inv.residual_norm * inv.residual_norm)};
    return rep;
}

} // namespace sinetype
