#include "sinetype/sturm_liouville.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "sinetype/errors.hpp"
#include "sinetype/stability.hpp"

namespace sinetype {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kCutMargin = 1e-10;

MainPart profile_main(int N) {
    std::vector<Complex> coeffs =
        N == 1 ? std::vector<Complex>{0.0, 1.0} : std::vector<Complex>{1.0};
    return MainPart(SineTypeBase::sin_scaled(kPi), std::move(coeffs));
}

} // namespace

ThetaFunction theta_from_u(const std::vector<Complex>& u_modes) {
    double scale = 0.0;
    for (const Complex& c : u_modes) scale = std::max(scale, std::abs(c));
    if (!u_modes.empty() && std::abs(u_modes[0]) > 1e-12 * std::max(1.0, scale))
        throw std::invalid_argument("theta_from_u: mean of u must vanish");

    // cos(kx) on (0,π) extends evenly: u(|x|)/2 = Σ (a_k/4)(e^{ikx}+e^{-ikx})
    std::map<int, Complex> modes;
    for (int k = 1; k < int(u_modes.size()); ++k) {
        if (u_modes[k] == 0.0) continue;
        modes[k] = 0.25 * u_modes[k];
        modes[-k] = 0.25 * u_modes[k];
    }
    int M = std::max(0, int(u_modes.size()) - 1);
    return ThetaFunction(profile_main(1), FourierTail(kPi, M, modes));
}

ThetaFunction theta_from_v(const std::vector<Complex>& v_modes) {
    // sin(kx) extends oddly; the transform of w then equals
    // ∫₀^π v(x) sin(zx) dx exactly: w = Σ (-β_k/4)(e^{ikx} - e^{-ikx})
    std::map<int, Complex> modes;
    for (int i = 0; i < int(v_modes.size()); ++i) {
        if (v_modes[i] == 0.0) continue;
        int k = i + 1;
        modes[k] = -0.25 * v_modes[i];
        modes[-k] = 0.25 * v_modes[i];
    }
    int M = int(v_modes.size());
    return ThetaFunction(profile_main(0), FourierTail(kPi, M, modes));
}

// ── spectra ─────────────────────────────────────────────────────────────────

Spectrum::Spectrum(std::vector<Complex> eigenvalues) : values_(std::move(eigenvalues)) {
    if (values_.empty()) throw std::invalid_argument("Spectrum: needs at least one eigenvalue");
}

Complex Spectrum::at(int n) const {
    if (n < 1 || n > size()) throw std::out_of_range("Spectrum::at");
    return values_[n - 1];
}

Spectrum unperturbed_spectrum(int count) {
    if (count < 1) throw std::invalid_argument("unperturbed_spectrum: count must be >= 1");
    std::vector<Complex> values(count);
    for (int n = 1; n <= count; ++n) values[n - 1] = double(n) * double(n);
    return Spectrum(std::move(values));
}

double lambda_metric(const Spectrum& a, const Spectrum& b, int j) {
    if (a.size() != b.size())
        throw std::invalid_argument("lambda_metric: spectra must have equal length");
    if (j < 0) throw std::invalid_argument("lambda_metric: j must be >= 0");
    double sum = 0.0;
    for (int n = 1; n <= a.size(); ++n) {
        double weight = std::pow(double(n), double(j));
        sum += std::norm(a.at(n) - b.at(n)) / (weight * weight);
    }
    return std::sqrt(sum);
}

namespace {

// principal square root with the negative real cut resolved toward +i
Complex unfold_root(Complex lambda, int n) {
    if (lambda == 0.0) return 0.0;
    if (lambda.real() < 0.0 && lambda.imag() < 0.0 && -lambda.imag() <= kCutMargin)
        throw BranchAmbiguity("spectrum_to_zeros: eigenvalue " + std::to_string(n) +
                              " sits just under the branch cut");
    if (lambda.imag() == 0.0 && lambda.real() < 0.0)
        return Complex(0.0, std::sqrt(-lambda.real()));
    return std::sqrt(lambda);
}

} // namespace

ZeroSequence spectrum_to_zeros(const Spectrum& spec, int N) {
    if (N != 0 && N != 1) throw std::invalid_argument("spectrum_to_zeros: N must be 0 or 1");
    const int count = spec.size();
    const int first = 1 - N;
    std::vector<Complex> pts(2 * count + 1 + N);
    int pos = 0;
    if (N == 1) pts[pos++] = 0.0; // head zero contributed by P(z) = z
    pts[pos++] = 0.0;             // lattice origin, always a zero of z^N·Δ(z²)·z^{1-N}
    for (int k = 1; k <= count; ++k) {
        Complex root = unfold_root(spec.at(k), k);
        pts[pos++] = root;  // index 2k
        pts[pos++] = -root; // index 2k+1
    }
    return ZeroSequence(first, std::move(pts));
}

Theorem12Report theorem12_experiment(const Spectrum& spec_a, const Spectrum& spec_b,
                                     int profile_N, int num_modes) {
    if (profile_N != 0 && profile_N != 1)
        throw std::invalid_argument("theorem12_experiment: profile must be 0 or 1");
    if (spec_a.size() != spec_b.size())
        throw std::invalid_argument("theorem12_experiment: spectra must have equal length");
    if (num_modes < 0 || spec_a.size() < num_modes)
        throw std::invalid_argument("theorem12_experiment: need at least num_modes eigenvalues");

    MainPart main = profile_main(profile_N);
    ZeroSequence za = spectrum_to_zeros(spec_a, profile_N);
    ZeroSequence zb = spectrum_to_zeros(spec_b, profile_N);
    auto rec = stability_ratio(za, zb, main, num_modes, 0, 0);

    Theorem12Report report;
    report.profile_N = profile_N;
    // ‖u‖ = √2·‖w‖ under either extension convention
    report.lhs = rec ? std::sqrt(2.0) * rec->numerator : 0.0;
    const int metric_j = profile_N == 1 ? 0 : 1;
    report.rhs = lambda_metric(spec_a, spec_b, metric_j);
    Spectrum base = unperturbed_spectrum(spec_a.size());
    report.r = std::max(lambda_metric(spec_a, base, metric_j),
                        lambda_metric(spec_b, base, metric_j));
    report.ratio = report.rhs > 0.0 ? report.lhs / report.rhs : 0.0;
    return report;
}

} // namespace sinetype
