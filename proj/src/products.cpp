#include "sinetype/products.hpp"

#include <cmath>

#include "sinetype/errors.hpp"

namespace sinetype {

namespace {

Complex ipow(Complex z, int n) { return detail::ipow(z, n); }

// Σ_{n>n_hi} |μ_n^N (z_n⁰ - z)|⁻², explicit terms plus an integral-style
// remainder once the lattice has safely outrun |z|
double geometric_tail_sum(const MainPart& main, int n_hi, Complex z) {
    const int N = main.degree();
    const double sep = main.base().separation();
    double sum = 0.0;
    double last_dist = 0.0;
    const int chunk = 20000;
    int n = n_hi, i = 0;
    for (;;) {
        ++n;
        ++i;
        Complex z0 = main.lattice_point(n);
        Complex mu = main.mu(n);
        double d = std::abs(z0 - z);
        double m = std::abs(ipow(mu, N));
        sum += 1.0 / (m * m * d * d);
        last_dist = std::abs(z0);
        if (i >= chunk && last_dist > std::abs(z) + 2.0 * sep) break;
        if (i > 5'000'000) break;
    }
    // beyond the explicit window the lattice is separated by at least `sep`,
    // so the two enumeration branches together contribute at most an
    // integral remainder ∫ dr/(sep·(r-|z|)²) from the last modulus onward
    double start = last_dist - std::abs(z);
    if (start > 2.0 * sep) {
        double mN = 1.0;
        if (N > 0) {
            double m2 = std::pow(last_dist, N);
            mN = m2 * m2;
        }
        sum += 2.0 / (sep * (start - sep) * mN);
    }
    return sum;
}

} // namespace

Complex product_eval_ratio(const MainPart& main, const ZeroSequence& zeros, Complex z,
                           double tail_tol) {
    if (zeros.first_index() != main.first_index())
        throw std::invalid_argument("zero sequence must start at the lattice head");
    const int n_hi = zeros.last_index();
    const double zscale = std::max(1.0, std::abs(z));

    Complex prod = 1.0;
    for (int n = zeros.first_index(); n <= n_hi; ++n) {
        Complex z0 = main.lattice_point(n);
        if (std::abs(z0 - z) < 1e-12 * zscale)
            throw NearLatticePole("evaluation point collides with lattice point " +
                                  std::to_string(n));
        prod *= (zeros.at(n) - z) / (z0 - z);
    }

    // certified bound on the neglected residual tail
    const double delta = main.base().separation() / 3.0;
    for (int n = n_hi + 1;; ++n) {
        Complex z0 = main.lattice_point(n);
        if (std::abs(z0) > std::abs(z) + 2.0 * main.base().separation()) break;
        if (std::abs(z0 - z) < delta)
            throw NearLatticePole("tail bound invalid: point within δ of lattice index " +
                                  std::to_string(n));
    }
    ResidualReport res = residuals(zeros, main);
    const std::size_t m = res.kappa.size();
    const std::size_t decile = std::max<std::size_t>(1, m / 10);
    double tail_sq = 0.0;
    for (std::size_t i = m - decile; i < m; ++i) tail_sq += std::norm(res.kappa[i]);
    const double kappa_tail = std::sqrt(3.0 * tail_sq); // extrapolation headroom
    const double log_bound = kappa_tail * std::sqrt(geometric_tail_sum(main, n_hi, z));
    if (std::expm1(log_bound) > tail_tol)
        throw TailBoundExceeded("certified tail factor bound " +
                                std::to_string(std::expm1(log_bound)) + " exceeds tolerance");

    return main.eval(z) * prod;
}

Complex product_eval_hadamard(const MainPart& main, const ZeroSequence& zeros, Complex z, int n_max,
                              double tol) {
    if (zeros.first_index() != main.first_index())
        throw std::invalid_argument("zero sequence must start at the lattice head");
    if (n_max < 1 || n_max > zeros.last_index())
        throw std::invalid_argument("n_max outside the supplied sequence");
    const int n_far = std::min(2 * n_max, zeros.last_index());

    const LeadingData& ld = main.leading();
    Complex prod = ld.alpha * std::exp(ld.beta * z);
    Complex at_nmax = 0.0;
    for (int n = zeros.first_index(); n <= n_far; ++n) {
        Complex mu = main.mu(n);
        prod *= (zeros.at(n) - z) / mu * std::exp(z / mu);
        if (n == n_max) at_nmax = prod;
    }
    double scale = std::max(1.0, std::abs(at_nmax));
    if (std::abs(prod - at_nmax) > tol * scale)
        throw SlowConvergence("truncations at n_max and 2·n_max differ by " +
                              std::to_string(std::abs(prod - at_nmax) / scale));
    return at_nmax;
}

} // namespace sinetype
