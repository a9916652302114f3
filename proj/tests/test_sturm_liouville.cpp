#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "sinetype/errors.hpp"
#include "sinetype/model.hpp"
#include "sinetype/moments.hpp"
#include "sinetype/quadrature.hpp"
#include "sinetype/sturm_liouville.hpp"
#include "sinetype/zero_finder.hpp"

using namespace sinetype;
using fixtures::pi;

namespace {

// fold localized z-plane zeros back to eigenvalues: λ_k = mean of the two
// squared square roots
Spectrum fold_spectrum(const ThetaFunction& theta, int count) {
    LocalizationReport rep = localize_zeros(theta, 2 * count + 1);
    std::vector<Complex> lam;
    for (int k = 1; k <= count; ++k) {
        Complex a = rep.zeros.at(2 * k);
        Complex b = rep.zeros.at(2 * k + 1);
        lam.push_back(0.5 * (a * a + b * b));
    }
    return Spectrum(lam);
}

std::vector<Complex> random_cosine_modes(int M, double scale, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> a(std::size_t(M) + 1, Complex(0.0)); // a[0] stays 0
    for (int k = 1; k <= M; ++k) a[std::size_t(k)] = scale * rng.unit_disk() / double(k);
    return a;
}

} // namespace

TEST_CASE("even reduction: u = 0 is the unperturbed problem") {
    ThetaFunction theta = theta_from_u({Complex(0.0)});
    CHECK(theta.main().degree() == 1);
    CHECK(theta.tail().is_zero());
    CHECK(std::abs(theta.eval(0.5) - 0.5) < 1e-14);
    CHECK(std::abs(theta.eval(4.0)) < 1e-12);
}

TEST_CASE("even reduction: transform equals the half-line cosine integral") {
    std::vector<Complex> u = {Complex(0.0), Complex(0.2, 0.0), Complex(0.0),
                              Complex(-0.05, 0.03)};
    ThetaFunction theta = theta_from_u(u);
    auto u_at = [&](double x) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::cos(double(k) * x);
        return acc;
    };
    const Complex pts[] = {{0.3, 0.0}, {1.7, 0.0}, {-0.9, 0.4}, {2.5, -0.3}, {0.0, 0.0},
                           {4.2, 0.1}, {-3.3, 0.0}, {0.5, 1.0}, {6.1, 0.0}, {-1.0, -0.6}};
    for (Complex z : pts) {
        Complex direct = integrate_complex(
            [&](double x) { return u_at(x) * std::cos(z * x); }, 0.0, pi(), 48);
        CHECK(std::abs(theta.tail().eval(z) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("even reduction: symmetric modes and the L2 bridge") {
    const double eps = 0.1;
    ThetaFunction theta = theta_from_u({Complex(0.0), Complex(2.0 * eps)});
    const FourierTail& tail = theta.tail();
    for (int k = 1; k <= tail.cutoff(); ++k) CHECK(tail.mode(k) == tail.mode(-k));
    // ‖w‖ = ε√π, so ‖u‖ = √2‖w‖ = ε√(2π)
    CHECK(tail.l2_norm() == doctest::Approx(eps * 1.7724538509055159).epsilon(1e-12));
}

TEST_CASE("even reduction rejects a nonzero mean") {
    CHECK_THROWS_AS((void)theta_from_u({Complex(0.5)}), std::invalid_argument);
    CHECK_THROWS_AS((void)theta_from_u({Complex(1e-6), Complex(0.1)}), std::invalid_argument);
}

TEST_CASE("cosine family collapses to a rational closed form") {
    // u = 2ε·cos x  ⇒  θ(z) = z·sin(πz)·(z² - 1 - 2ε)/(z² - 1): the whole
    // adapter (extension, modes, transform) against one formula
    const double eps = 0.1;
    ThetaFunction theta = theta_from_u({Complex(0.0), Complex(2.0 * eps)});
    const Complex pts[] = {{0.4, 0.0}, {1.3, 0.2}, {-2.6, 0.0}, {0.0, 1.1}, {3.7, -0.4},
                           {-0.8, 0.8}, {5.5, 0.0}, {2.0, 2.0}, {-4.4, -0.1}, {0.25, 0.0}};
    for (Complex z : pts) {
        Complex closed = z * std::sin(pi() * z) * (z * z - 1.0 - 2.0 * eps) / (z * z - 1.0);
        CHECK(std::abs(theta.eval(z) - closed) < 1e-12 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("odd reduction: transform equals the half-line sine integral") {
    std::vector<Complex> v = {Complex(0.3, 0.0), Complex(0.0), Complex(0.1, -0.07)};
    ThetaFunction theta = theta_from_v(v);
    CHECK(theta.main().degree() == 0);
    auto v_at = [&](double x) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k)
            acc += v[k] * std::sin(double(k + 1) * x);
        return acc;
    };
    const Complex pts[] = {{0.6, 0.0}, {-1.4, 0.3}, {2.8, 0.0}, {0.0, 0.9}, {5.3, -0.2},
                           {-0.35, 0.0}, {3.9, 0.6}, {1.0, -1.0}, {-6.2, 0.0}, {0.45, 0.45}};
    for (Complex z : pts) {
        Complex direct = integrate_complex(
            [&](double x) { return v_at(x) * std::sin(z * x); }, 0.0, pi(), 48);
        CHECK(std::abs(theta.tail().eval(z) - direct) < 1e-10 * std::max(1.0, std::abs(direct)));
    }
    // odd extension: c₀ = 0 and antisymmetric modes
    CHECK(theta.tail().mode(0) == Complex(0.0));
    for (int k = 1; k <= theta.tail().cutoff(); ++k)
        CHECK(theta.tail().mode(-k) == -theta.tail().mode(k));
}

TEST_CASE("sine family collapses to a rational closed form") {
    // v = ε̃·sin x  ⇒  θ(z) = sin(πz)·(z² - 1 - ε̃)/(z² - 1)
    const double eps = 0.08;
    ThetaFunction theta = theta_from_v({Complex(eps)});
    for (Complex z : {Complex(0.45, 0.0), Complex(-1.8, 0.3), Complex(2.2, -1.0)}) {
        Complex closed = std::sin(pi() * z) * (z * z - 1.0 - eps) / (z * z - 1.0);
        CHECK(std::abs(theta.eval(z) - closed) < 1e-12 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("spectral metrics: frozen zeta value") {
    const int K = 10000;
    std::vector<Complex> a, b;
    for (int n = 1; n <= K; ++n) {
        double nn = double(n) * double(n);
        a.push_back(Complex(nn + 1.0 / double(n)));
        b.push_back(Complex(nn));
    }
    double metric = lambda_metric(Spectrum(a), Spectrum(b), 1);
    CHECK(std::abs(metric - 1.0403476504088132) < 1e-12); // π²/√90
    CHECK(lambda_metric(Spectrum(a), Spectrum(a), 1) == 0.0);
    CHECK(lambda_metric(Spectrum(b), Spectrum(a), 0) > metric);
}

TEST_CASE("spectrum unfolding: lattice, square roots, branch rule") {
    Spectrum flat = unperturbed_spectrum(5);
    ZeroSequence z1 = spectrum_to_zeros(flat, 1);
    CHECK(z1.first_index() == 0);
    CHECK(z1.at(0) == Complex(0.0));
    CHECK(z1.at(1) == Complex(0.0));
    CHECK(std::abs(z1.at(2) - 1.0) < 1e-15);
    CHECK(std::abs(z1.at(3) + 1.0) < 1e-15);
    CHECK(std::abs(z1.at(10) - 5.0) < 1e-14);

    Spectrum shifted(std::vector<Complex>{Complex(1.2), Complex(4.0)});
    ZeroSequence z0 = spectrum_to_zeros(shifted, 0);
    CHECK(z0.first_index() == 1);
    CHECK(std::abs(z0.at(2) - 1.0954451150103321) < 1e-15);
    CHECK(std::abs(z0.at(3) + 1.0954451150103321) < 1e-15);

    // negative real eigenvalues resolve toward +i
    ZeroSequence neg = spectrum_to_zeros(Spectrum({Complex(-4.0)}), 0);
    CHECK(std::abs(neg.at(2) - Complex(0.0, 2.0)) < 1e-15);

    CHECK_THROWS_AS((void)spectrum_to_zeros(Spectrum({Complex(-1.0, -1e-12)}), 0),
                    BranchAmbiguity);
}

TEST_CASE("round trip: unfolded spectrum matches localized zeros") {
    ThetaFunction theta = theta_from_u(random_cosine_modes(5, 0.4, 51));
    const int count = 25;
    LocalizationReport rep = localize_zeros(theta, 2 * count + 1);
    Spectrum lam = fold_spectrum(theta, count);
    ZeroSequence unfolded = spectrum_to_zeros(lam, 1);
    for (int n = 2; n <= 2 * count + 1; ++n)
        CHECK(std::abs(unfolded.at(n) - rep.zeros.at(n)) < 1e-8);

    // in-class asymptotics: the spectral residual is square-summable with
    // a trailing profile that has already died off
    double tail_sq = 0.0;
    for (int k = 8; k <= count; ++k) {
        Complex res = lam.at(k) - Complex(double(k) * double(k));
        tail_sq += std::norm(res);
    }
    CHECK(tail_sq < 1e-16);
}

TEST_CASE("cosine family spectrum: first eigenvalue moves by exactly 2ε") {
    for (double eps : {0.01, 0.1}) {
        ThetaFunction theta = theta_from_u({Complex(0.0), Complex(2.0 * eps)});
        Spectrum lam = fold_spectrum(theta, 12);
        CHECK(std::abs(lam.at(1) - Complex(1.0 + 2.0 * eps)) < 1e-9);
        for (int k = 2; k <= 12; ++k)
            CHECK(std::abs(lam.at(k) - Complex(double(k) * double(k))) < 1e-9);
    }
}

TEST_CASE("round-trip symmetry: recovered modes keep the extension parity") {
    // even input
    {
        ThetaFunction theta = theta_from_u(random_cosine_modes(6, 0.4, 52));
        LocalizationReport rep = localize_zeros(theta, 80);
        MomentSystem sys = build_moment_system(rep.zeros.from_index(1), theta.main(), 6);
        FourierTail rec = invert_to_tail(sys).tail;
        for (int k = 1; k <= 6; ++k)
            CHECK(std::abs(rec.mode(k) - rec.mode(-k)) < 1e-12);
    }
    // odd input
    {
        Rng rng(53);
        std::vector<Complex> v;
        for (int k = 1; k <= 5; ++k) v.push_back(0.3 * rng.unit_disk() / double(k));
        ThetaFunction theta = theta_from_v(v);
        LocalizationReport rep = localize_zeros(theta, 80);
        MomentSystem sys = build_moment_system(rep.zeros.from_index(1), theta.main(), 5);
        FourierTail rec = invert_to_tail(sys).tail;
        CHECK(std::abs(rec.mode(0)) < 1e-12);
        for (int k = 1; k <= 5; ++k)
            CHECK(std::abs(rec.mode(k) + rec.mode(-k)) < 1e-12);
    }
}

TEST_CASE("theorem 1/2 experiment: identical spectra give a vanishing distance") {
    Spectrum flat = unperturbed_spectrum(30);
    Theorem12Report rep = theorem12_experiment(flat, flat, 1, 8);
    CHECK(rep.lhs == 0.0);
    CHECK(rep.rhs == 0.0);
    CHECK(rep.ratio == 0.0);
}

TEST_CASE("theorem 1 experiment recovers the potential norm of the cosine family") {
    const double eps = 0.1;
    ThetaFunction theta = theta_from_u({Complex(0.0), Complex(2.0 * eps)});
    Spectrum lam = fold_spectrum(theta, 30);
    Theorem12Report rep = theorem12_experiment(lam, unperturbed_spectrum(30), 1, 8);
    CHECK(rep.profile_N == 1);
    CHECK(rep.rhs == doctest::Approx(2.0 * eps).epsilon(1e-8));         // Λ₀ = |λ̂₁|
    CHECK(rep.lhs == doctest::Approx(0.25066282746310004).epsilon(1e-4)); // ε√(2π)
    CHECK(rep.ratio == doctest::Approx(1.2533141373155001).epsilon(1e-4)); // √(π/2)
    CHECK(rep.r == doctest::Approx(2.0 * eps).epsilon(1e-6));
}

TEST_CASE("theorem 2 experiment: sine family lands on the same constant") {
    const double eps = 0.06;
    Spectrum a(std::vector<Complex>{Complex(1.0 + eps), Complex(4.0), Complex(9.0),
                                    Complex(16.0), Complex(25.0), Complex(36.0),
                                    Complex(49.0), Complex(64.0), Complex(81.0),
                                    Complex(100.0), Complex(121.0), Complex(144.0),
                                    Complex(169.0), Complex(196.0), Complex(225.0),
                                    Complex(256.0), Complex(289.0), Complex(324.0),
                                    Complex(361.0), Complex(400.0)});
    Theorem12Report rep = theorem12_experiment(a, unperturbed_spectrum(20), 0, 6);
    CHECK(rep.profile_N == 0);
    CHECK(rep.rhs == doctest::Approx(eps).epsilon(1e-9)); // Λ₁ = |λ̂₁|/1
    CHECK(rep.ratio == doctest::Approx(1.2533141373155001).epsilon(1e-3));
}

TEST_CASE("linearized regime: the ratio is stable across the two epsilons") {
    double ratios[2];
    int i = 0;
    for (double eps : {0.01, 0.1}) {
        ThetaFunction theta = theta_from_u({Complex(0.0), Complex(2.0 * eps)});
        Spectrum lam = fold_spectrum(theta, 25);
        Theorem12Report rep = theorem12_experiment(lam, unperturbed_spectrum(25), 1, 8);
        REQUIRE(std::isfinite(rep.ratio));
        ratios[i++] = rep.ratio;
    }
    CHECK(ratios[0] / ratios[1] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("z-plane and λ-plane metrics stay within a bounded factor") {
    Rng rng(54);
    const int K = 30;
    std::vector<Complex> a, b;
    double norm2 = 0.0;
    std::vector<Complex> hat;
    for (int n = 1; n <= K; ++n) {
        Complex h = rng.unit_disk() / double(n);
        hat.push_back(h);
        norm2 += std::norm(h);
    }
    double scale = 0.1 / std::sqrt(norm2);
    for (int n = 1; n <= K; ++n) {
        double nn = double(n) * double(n);
        a.push_back(Complex(nn) + scale * hat[std::size_t(n - 1)]);
        b.push_back(Complex(nn));
    }
    Spectrum sa(a), sb(b);
    ZeroSequence za = spectrum_to_zeros(sa, 1);
    ZeroSequence zb = spectrum_to_zeros(sb, 1);
    MainPart main = fixtures::main_n1();
    double z_metric = 0.0;
    for (int n = za.first_index(); n <= za.last_index(); ++n)
        z_metric += std::norm(main.mu(n) * (za.at(n) - zb.at(n)));
    z_metric = std::sqrt(z_metric);
    double lam_metric = lambda_metric(sa, sb, 0);
    REQUIRE(lam_metric == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(z_metric / lam_metric > 1.0 / 3.0);
    CHECK(z_metric / lam_metric < 3.0);
}

TEST_CASE("spectrum plumbing rejects malformed input") {
    CHECK_THROWS_AS(Spectrum(std::vector<Complex>{}), std::invalid_argument);
    Spectrum s = unperturbed_spectrum(3);
    CHECK_THROWS_AS((void)s.at(0), std::out_of_range);
    CHECK_THROWS_AS((void)s.at(4), std::out_of_range);
    CHECK_THROWS_AS((void)lambda_metric(unperturbed_spectrum(3), unperturbed_spectrum(4), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)theorem12_experiment(unperturbed_spectrum(5),
                                               unperturbed_spectrum(5), 1, 8),
                    std::invalid_argument); // too few eigenvalues for the cutoff
}
