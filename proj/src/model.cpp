#include "sinetype/model.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "sinetype/errors.hpp"

namespace sinetype {

namespace {

const double kPi = SineTypeBase::pi();

Complex ipow(Complex z, int n) { return detail::ipow(z, n); }

// roots of a polynomial in ascending-coefficient form, via the companion
// matrix; degree 0 and 1 are handled directly
std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    int N = int(coeffs.size()) - 1;
    if (N == 0) return {};
    if (std::abs(coeffs.back()) == 0.0)
        throw std::invalid_argument("leading polynomial coefficient is zero");
    if (N == 1) return {-coeffs[0] / coeffs[1]};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(N, N);
    for (int i = 1; i < N; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < N; ++i) C(i, N - 1) = -coeffs[i] / coeffs[N];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, /*computeEigenvectors=*/false);
    std::vector<Complex> roots(N);
    for (int i = 0; i < N; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

} // namespace

// ── FourierTail ─────────────────────────────────────────────────────────────

FourierTail::FourierTail(double b, int M, const std::map<int, Complex>& modes)
    : b_(b), M_(M), modes_(std::size_t(2 * M + 1), Complex(0.0)) {
    if (!(b > 0.0)) throw std::invalid_argument("tail type b must be positive");
    if (M < 0) throw std::invalid_argument("mode cutoff M must be nonnegative");
    for (const auto& [k, c] : modes) {
        if (k < -M || k > M) throw std::invalid_argument("tail mode index outside [-M, M]");
        modes_[std::size_t(k + M)] = c;
    }
}

Complex FourierTail::mode(int k) const {
    if (k < -M_ || k > M_) return 0.0;
    return modes_[std::size_t(k + M_)];
}

Complex FourierTail::eval(Complex z, int deriv_order) const {
    if (deriv_order < 0) throw std::invalid_argument("negative deriv_order");
    double scale = 2.0;
    for (int i = 0; i <= deriv_order; ++i) scale *= b_;
    Complex sum = 0.0;
    for (int k = -M_; k <= M_; ++k) {
        const Complex c = modes_[std::size_t(k + M_)];
        if (c == Complex(0.0)) continue;
        sum += c * sinc_deriv(b_ * z + kPi * double(k), deriv_order);
    }
    return scale * sum;
}

double FourierTail::l2_norm() const {
    double s = 0.0;
    for (const Complex& c : modes_) s += std::norm(c);
    return std::sqrt(2.0 * b_ * s);
}

bool FourierTail::is_zero() const {
    for (const Complex& c : modes_)
        if (c != Complex(0.0)) return false;
    return true;
}

// ── MainPart ────────────────────────────────────────────────────────────────

MainPart::MainPart(SineTypeBase base, std::vector<Complex> poly_coeffs)
    : base_(std::move(base)), poly_coeffs_(std::move(poly_coeffs)) {
    poly_zeros_ = poly_roots(poly_coeffs_);
    double scale = 1.0;
    for (const Complex& r : poly_zeros_) scale = std::max(scale, std::abs(r));
    for (Complex& r : poly_zeros_)
        if (std::abs(r) < 1e-10 * scale) r = 0.0;
    // index 0 carries the smallest root: store descending by modulus
    std::sort(poly_zeros_.begin(), poly_zeros_.end(), [](Complex a, Complex b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    leading_ = leading_data(*this);
}

Complex MainPart::lattice_point(int n) const {
    if (n >= 1) return base_.lattice_point(n);
    int pos = n - first_index(); // 0..N-1 for poly indices
    if (pos < 0) throw std::invalid_argument("lattice index below 1-N");
    return poly_zeros_[std::size_t(pos)];
}

Complex MainPart::mu(int n) const {
    Complex z0 = lattice_point(n);
    return (z0 == Complex(0.0)) ? Complex(-1.0) : z0;
}

Complex MainPart::poly_eval(Complex z, int deriv_order) const {
    if (deriv_order < 0) throw std::invalid_argument("negative deriv_order");
    // differentiate the coefficient vector, then Horner
    std::vector<Complex> c = poly_coeffs_;
    for (int d = 0; d < deriv_order; ++d) {
        if (c.size() <= 1) return 0.0;
        for (std::size_t j = 1; j < c.size(); ++j) c[j - 1] = double(j) * c[j];
        c.pop_back();
    }
    Complex acc = 0.0;
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
    return acc;
}

Complex MainPart::eval(Complex z, int deriv_order) const {
    switch (deriv_order) {
        case 0: return poly_eval(z) * base_.eval(z);
        case 1: return poly_eval(z, 1) * base_.eval(z) + poly_eval(z) * base_.eval(z, 1);
        case 2:
            return poly_eval(z, 2) * base_.eval(z) + 2.0 * poly_eval(z, 1) * base_.eval(z, 1) +
                   poly_eval(z) * base_.eval(z, 2);
        default: throw std::invalid_argument("unsupported deriv_order for main part");
    }
}

LeadingData leading_data(const MainPart& main, int nodes, double radius_scale) {
    // radius: half the distance to the nearest nonzero lattice point
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& r : main.poly_zeros()) {
        double d = std::abs(r);
        if (d > 0.0) nearest = std::min(nearest, d);
    }
    for (int n = 1; n <= 64; ++n) {
        double d = std::abs(main.lattice_point(n));
        if (d > 0.0) {
            nearest = std::min(nearest, d);
            break; // lattice moduli are nondecreasing from here on
        }
    }
    if (!std::isfinite(nearest)) nearest = 2.0;
    const double rho = 0.5 * nearest * radius_scale;

    const int J = main.degree() + 6; // need coefficients through s+1 <= N+2
    std::vector<Complex> a(std::size_t(J), Complex(0.0));
    for (int l = 0; l < nodes; ++l) {
        double phi = 2.0 * kPi * double(l) / double(nodes);
        Complex zl = rho * Complex(std::cos(phi), std::sin(phi));
        Complex Sl = main.eval(zl);
        for (int j = 0; j < J; ++j)
            a[std::size_t(j)] += Sl * Complex(std::cos(j * phi), -std::sin(j * phi));
    }
    double rp = 1.0;
    for (int j = 0; j < J; ++j) {
        a[std::size_t(j)] /= double(nodes) * rp;
        rp *= rho;
    }

    double amax = 0.0;
    for (const Complex& aj : a) amax = std::max(amax, std::abs(aj));
    if (amax < 1e-250) throw DegenerateMainPart("main part vanishes identically at the origin contour");
    const double tol = 1e-10 * amax;
    int s = -1;
    for (int j = 0; j < J; ++j)
        if (std::abs(a[std::size_t(j)]) >= tol) { s = j; break; }
    if (s < 0 || s + 1 >= J) throw DegenerateMainPart("could not locate leading Taylor coefficient");

    LeadingData ld;
    ld.s = s;
    ld.alpha = a[std::size_t(s)];
    ld.gamma = a[std::size_t(s + 1)] / a[std::size_t(s)];
    ld.beta = Complex(double(s), 0.0) + ld.gamma;
    return ld;
}

// ── ThetaFunction ───────────────────────────────────────────────────────────

ThetaFunction::ThetaFunction(MainPart main, FourierTail tail)
    : main_(std::move(main)), tail_(std::move(tail)) {
    if (std::abs(main_.base().type() - tail_.type()) > 1e-12 * main_.base().type())
        throw std::invalid_argument("main part and tail disagree on the type b");
}

Complex ThetaFunction::eval(Complex z, int deriv_order) const {
    if (deriv_order < 0 || deriv_order > 2)
        throw std::invalid_argument("unsupported deriv_order for theta");
    return main_.eval(z, deriv_order) + tail_.eval(z, deriv_order);
}

// ── ZeroSequence / residuals ────────────────────────────────────────────────

ZeroSequence::ZeroSequence(int first_index, std::vector<Complex> entries)
    : first_(first_index), entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("zero sequence must be nonempty");
}

Complex ZeroSequence::at(int n) const {
    int pos = n - first_;
    if (pos < 0 || pos >= int(entries_.size()))
        throw std::invalid_argument("zero sequence index out of range");
    return entries_[std::size_t(pos)];
}

ZeroSequence ZeroSequence::truncated(int n_hi) const {
    if (n_hi < first_) throw std::invalid_argument("truncation below first index");
    std::size_t keep = std::min(entries_.size(), std::size_t(n_hi - first_ + 1));
    return ZeroSequence(first_, std::vector<Complex>(entries_.begin(), entries_.begin() + long(keep)));
}

ZeroSequence ZeroSequence::from_index(int n_lo) const {
    if (n_lo < first_) n_lo = first_;
    if (n_lo > last_index()) throw std::invalid_argument("slice start beyond last index");
    return ZeroSequence(n_lo, std::vector<Complex>(entries_.begin() + long(n_lo - first_), entries_.end()));
}

ResidualReport residuals(const ZeroSequence& zeros, const MainPart& main) {
    if (zeros.first_index() < main.first_index())
        throw std::invalid_argument("zero sequence starts before the lattice");
    const int N = main.degree();
    ResidualReport rep;
    rep.first_index = zeros.first_index();
    rep.kappa.reserve(zeros.size());
    for (int n = zeros.first_index(); n <= zeros.last_index(); ++n)
        rep.kappa.push_back(ipow(main.mu(n), N) * (zeros.at(n) - main.lattice_point(n)));
    double total = 0.0;
    for (const Complex& k : rep.kappa) total += std::norm(k);
    rep.l2_norm = std::sqrt(total);
    rep.tail_profile.resize(rep.kappa.size());
    double suffix = 0.0;
    for (std::size_t i = rep.kappa.size(); i-- > 0;) {
        rep.tail_profile[i] = suffix; // strictly after position i
        suffix += std::norm(rep.kappa[i]);
    }
    return rep;
}

// ── sine-type bound sampling ────────────────────────────────────────────────

SineTypeBounds verify_sine_type(const SineTypeBase& base, double K, const SamplingGrid& grid) {
    if (!(K > 0.0)) throw std::invalid_argument("sampling line offset K must be positive");
    if (grid.count < 2 || !(grid.re_max > grid.re_min))
        throw std::invalid_argument("bad sampling grid");
    SineTypeBounds out;
    out.c_est = std::numeric_limits<double>::infinity();
    out.C_est = 0.0;
    const double damp = std::exp(-K * base.type());
    for (int side = 0; side < 2; ++side) {
        double y = (side == 0) ? K : -K;
        for (int i = 0; i < grid.count; ++i) {
            double x = grid.re_min + (grid.re_max - grid.re_min) * double(i) / double(grid.count - 1);
            double v = std::abs(base.eval(Complex(x, y))) * damp;
            out.c_est = std::min(out.c_est, v);
            out.C_est = std::max(out.C_est, v);
        }
    }
    return out;
}

} // namespace sinetype
