#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "fixtures.hpp"
#include "sinetype/errors.hpp"
#include "sinetype/json_io.hpp"
#include "sinetype/model.hpp"
#include "sinetype/quadrature.hpp"

using namespace sinetype;
using fixtures::pi;

namespace {
double cdist(Complex a, Complex b) { return std::abs(a - b); }
} // namespace

TEST_CASE("base evaluation on the canonical lattice") {
    SineTypeBase base = SineTypeBase::sin_scaled(pi());
    CHECK(cdist(base.eval(0.5), 1.0) < 1e-15);
    CHECK(std::abs(base.eval(3.0)) < 1e-13);
    CHECK(cdist(base.eval(3.0, 1), Complex(-pi())) < 1e-13);
    CHECK_THROWS_AS((void)base.eval(1.0, 3), std::invalid_argument);
}

TEST_CASE("lattice enumeration: modulus order, positive first") {
    SineTypeBase base = SineTypeBase::sin_scaled(pi());
    CHECK(cdist(base.lattice_point(1), 0.0) == 0.0);
    CHECK(cdist(base.lattice_point(2), 1.0) < 1e-15);
    CHECK(cdist(base.lattice_point(3), -1.0) < 1e-15);
    CHECK(cdist(base.lattice_point(10), 5.0) < 1e-14);
    CHECK(cdist(base.lattice_point(11), -5.0) < 1e-14);
    CHECK_THROWS_AS((void)base.lattice_point(0), std::invalid_argument);

    SineTypeBase halved = SineTypeBase::sin_scaled(pi() / 2.0);
    CHECK(cdist(halved.lattice_point(2), 2.0) < 1e-14);
    CHECK(halved.separation() == doctest::Approx(2.0));
}

TEST_CASE("tail transform closed form: mode orthogonality") {
    FourierTail flat(pi(), 0, {{0, 1.0}});
    CHECK(cdist(flat.eval(0.0), 2.0 * pi()) < 1e-12);

    FourierTail one(pi(), 1, {{1, 1.0}});
    CHECK(std::abs(one.eval(5.0)) < 1e-12);     // e^{ix} ⟂ e^{-i5x}
    CHECK(cdist(one.eval(-1.0), 2.0 * pi()) < 1e-12);
}

TEST_CASE("tail transform matches direct quadrature (derivatives too)") {
    FourierTail tail = fixtures::random_tail(pi(), 6, 0.8, 41);
    const Complex pts[] = {{0.3, 0.0}, {-2.7, 0.4}, {5.2, -1.1}, {0.0, 0.0}, {-1.0, 0.0},
                           {7.9, 0.2}, {-0.5, -0.5}, {3.0, 1.0}, {12.4, 0.0}, {0.25, 2.0}};
    for (int nu = 0; nu <= 2; ++nu)
        for (Complex z : pts) {
            Complex direct = fixtures::tail_transform_quadrature(tail, z, nu);
            CHECK(cdist(tail.eval(z, nu), direct) < 1e-10 * std::max(1.0, std::abs(direct)));
        }
}

TEST_CASE("tail transform is entire: removable points agree with nearby limits") {
    // z = -πk/b sits on top of a pole of the sinc denominator; the value
    // there must be the analytic limit of off-point values.
    FourierTail tail(pi(), 2, {{2, Complex(0.4, -0.1)}, {-1, Complex(0.0, 0.7)}});
    for (int k : {-2, -1, 0, 1, 2}) {
        Complex p(-double(k), 0.0); // -πk/b with b = π
        Complex at = tail.eval(p);
        Complex v7 = tail.eval(p + Complex(1e-7, 0.0));
        Complex v8 = tail.eval(p + Complex(1e-8, 0.0));
        Complex extrap = (10.0 * v8 - v7) / 9.0; // kills the linear error term
        CHECK(cdist(at, extrap) < 1e-8 * std::max(1.0, std::abs(at)));
    }
}

TEST_CASE("tail norm: closed form vs quadrature of |w|^2") {
    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL}) {
        FourierTail tail = fixtures::random_tail(pi(), 16, 1.3, seed);
        double direct = fixtures::tail_norm_sq_quadrature(tail);
        CHECK(tail.l2_norm() * tail.l2_norm() == doctest::Approx(direct).epsilon(1e-10));
    }
    FourierTail big = fixtures::random_tail(pi(), 64, 0.9, 10);
    CHECK(big.l2_norm() * big.l2_norm() ==
          doctest::Approx(fixtures::tail_norm_sq_quadrature(big)).epsilon(1e-10));
}

TEST_CASE("theta evaluation composes main part and tail") {
    ThetaFunction plain(fixtures::main_n1(), FourierTail::zero(pi()));
    CHECK(cdist(plain.eval(0.5), 0.5) < 1e-14);
    CHECK(std::abs(plain.eval(7.0)) < 1e-13);

    const double eps = 0.01;
    ThetaFunction shifted(fixtures::main_n1(), FourierTail(pi(), 1, {{1, eps}}));
    CHECK(cdist(shifted.eval(-1.0), 2.0 * pi() * eps) < 1e-12);
}

TEST_CASE("theta derivative agrees with a central difference") {
    ThetaFunction theta = fixtures::random_theta(1, 8, 0.9, 12);
    Rng rng(99);
    const double h = 1e-6;
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        Complex z(rng.uniform(-20.0, 20.0), rng.uniform(-2.0, 2.0));
        Complex fd = (theta.eval(z + h) - theta.eval(z - h)) / (2.0 * h);
        Complex an = theta.eval(z, 1);
        if (std::abs(an) < 1e-3) continue; // difference quotient loses digits near critical points
        CHECK(cdist(an, fd) < 1e-6 * std::abs(an));
        ++checked;
    }
    CHECK(checked > 80);
}

TEST_CASE("mu: lattice value, or -1 at the origin") {
    MainPart m = fixtures::main_n1(); // poly zero at 0, base zero at 0
    CHECK(m.mu(0) == Complex(-1.0));  // poly zero z₀⁰ = 0
    CHECK(m.mu(1) == Complex(-1.0));  // base zero z₁⁰ = 0
    CHECK(cdist(m.mu(4), 2.0) < 1e-14);
    CHECK(cdist(m.mu(5), -2.0) < 1e-14);

    MainPart off(SineTypeBase::sin_scaled(pi()), {Complex(-3.0), Complex(1.0)}); // P = z - 3
    CHECK(cdist(off.mu(0), 3.0) < 1e-14);
    CHECK_THROWS_AS((void)off.mu(-1), std::invalid_argument);
}

TEST_CASE("poly zeros come from the coefficients") {
    MainPart m(SineTypeBase::sin_scaled(pi()),
               {Complex(2.0, 0.0), Complex(-3.0, 0.0), Complex(1.0, 0.0)}); // (z-1)(z-2)
    REQUIRE(m.degree() == 2);
    double worst = 0.0;
    for (Complex r : m.poly_zeros()) worst = std::max(worst, std::abs(m.poly_eval(r)));
    CHECK(worst < 1e-12);
    // descending modulus over indices 1-N..0 means index 0 holds the smallest
    CHECK(cdist(m.lattice_point(0), 1.0) < 1e-12);
    CHECK(cdist(m.lattice_point(-1), 2.0) < 1e-12);
}

TEST_CASE("leading data: frozen values for the three reference main parts") {
    // S = z·sin(πz): double zero, ln(S/z²) even
    LeadingData d1 = fixtures::main_n1().leading();
    CHECK(d1.s == 2);
    CHECK(cdist(d1.alpha, pi()) < 1e-10);
    CHECK(std::abs(d1.gamma) < 1e-10);
    CHECK(cdist(d1.beta, 2.0) < 1e-10);

    // S = sin(πz)
    LeadingData d0 = fixtures::main_n0().leading();
    CHECK(d0.s == 1);
    CHECK(cdist(d0.alpha, pi()) < 1e-10);
    CHECK(std::abs(d0.gamma) < 1e-10);
    CHECK(cdist(d0.beta, 1.0) < 1e-10);

    // S = (z-1)·sin(πz) = -πz + πz² + (π³/6)z³ + …, so α = -π, γ = a₂/a₁ = -1
    MainPart shifted(SineTypeBase::sin_scaled(pi()), {Complex(-1.0), Complex(1.0)});
    LeadingData ds = shifted.leading();
    CHECK(ds.s == 1);
    CHECK(cdist(ds.alpha, Complex(-pi())) < 1e-10);
    CHECK(cdist(ds.gamma, Complex(-1.0)) < 1e-10);
    CHECK(std::abs(ds.beta) < 1e-10);
}

TEST_CASE("leading data: independent contour oracle at a different radius") {
    // Re-derive the Taylor coefficients of S = (z-1)·sin(πz) with our own
    // trapezoid contour (different radius and node count than the library
    // uses) and compare the derived (s, α, γ).
    MainPart shifted(SineTypeBase::sin_scaled(pi()), {Complex(-1.0), Complex(1.0)});
    const double rho = 0.21;
    const int nodes = 1024;
    std::vector<Complex> a(6, 0.0);
    for (int j = 0; j < nodes; ++j) {
        double phi = 2.0 * pi() * double(j) / double(nodes);
        Complex z = rho * std::exp(Complex(0.0, phi));
        Complex f = shifted.eval(z);
        for (std::size_t m = 0; m < a.size(); ++m)
            a[m] += f * std::exp(Complex(0.0, -phi * double(m))) / std::pow(rho, double(m));
    }
    for (auto& c : a) c /= double(nodes);
    REQUIRE(std::abs(a[0]) < 1e-12);
    REQUIRE(std::abs(a[1]) > 1e-3);
    LeadingData ds = shifted.leading();
    CHECK(cdist(ds.alpha, a[1]) < 1e-10);
    CHECK(cdist(ds.gamma, a[2] / a[1]) < 1e-10);
}

TEST_CASE("degenerate main part is rejected") {
    CHECK_THROWS_AS(MainPart(SineTypeBase::sin_scaled(pi()), {Complex(0.0)}),
                    DegenerateMainPart);
}

TEST_CASE("sine-type bounds on sampling lines") {
    SineTypeBase base = SineTypeBase::sin_scaled(pi());
    SineTypeBounds bd = verify_sine_type(base, 2.0, {});
    // |sin(π(x+2i))|e^{-2π} ranges over [(1-e^{-4π})/2, (1+e^{-4π})/2]
    CHECK(bd.c_est >= 0.49999825632882189 - 1e-12);
    CHECK(bd.C_est <= 0.50000174367117811 + 1e-12);

    SineTypeBounds one = verify_sine_type(SineTypeBase::sin_scaled(1.0), 3.0, {});
    CHECK(one.c_est > 0.0);
    CHECK(one.c_est <= one.C_est);
    CHECK(std::isfinite(one.C_est));
}

TEST_CASE("a gaussian-damped evaluator is flagged by the bounds") {
    // sin(z)e^{-z²} decays super-exponentially along horizontal lines, so the
    // lower sampled bound collapses.
    auto eval = [](Complex z, int) { return std::sin(z) * std::exp(-z * z); };
    auto lattice = [](int n) {
        if (n == 1) return Complex(0.0);
        int k = n / 2;
        double p = double(k) * pi();
        return (n % 2 == 0) ? Complex(p, 0.0) : Complex(-p, 0.0);
    };
    SineTypeBase bad = SineTypeBase::custom(1.0, eval, lattice, pi());
    SineTypeBounds bd = verify_sine_type(bad, 3.0, {});
    CHECK(bd.c_est < 1e-6 * bd.C_est);
}

TEST_CASE("zero sequence indexing and slicing") {
    ZeroSequence seq(-1, {Complex(9.0), Complex(8.0), Complex(7.0), Complex(6.0)});
    CHECK(seq.first_index() == -1);
    CHECK(seq.last_index() == 2);
    CHECK(seq.at(0) == Complex(8.0));
    CHECK_THROWS_AS((void)seq.at(3), std::invalid_argument);

    ZeroSequence head = seq.truncated(0);
    CHECK(head.size() == 2);
    CHECK(head.at(0) == Complex(8.0));

    ZeroSequence tail = seq.from_index(1);
    CHECK(tail.first_index() == 1);
    CHECK(tail.at(2) == Complex(6.0));
}

TEST_CASE("residuals: frozen arithmetic cases") {
    MainPart m0 = fixtures::main_n0();
    MainPart m1 = fixtures::main_n1();

    // exact lattice → all residuals vanish
    {
        std::vector<Complex> pts;
        for (int n = 0; n <= 20; ++n) pts.push_back(m1.lattice_point(n));
        ResidualReport rep = residuals(ZeroSequence(0, pts), m1);
        CHECK(rep.l2_norm < 1e-14);
    }
    // single perturbed entry, N = 0: ‖ϰ‖ equals the shift
    {
        std::vector<Complex> pts;
        for (int n = 1; n <= 20; ++n) pts.push_back(m0.lattice_point(n));
        pts[4] += 0.01; // index 5
        ResidualReport rep = residuals(ZeroSequence(1, pts), m0);
        CHECK(rep.l2_norm == doctest::Approx(0.01).epsilon(1e-12));
    }
    // N = 1, shifts 0.01/μ_n across n = 1..100: a hundred equal terms
    {
        std::vector<Complex> pts;
        for (int n = 1; n <= 100; ++n) pts.push_back(m1.lattice_point(n) + 0.01 / m1.mu(n));
        ResidualReport rep = residuals(ZeroSequence(1, pts), m1);
        CHECK(rep.l2_norm == doctest::Approx(0.1).epsilon(1e-12));
        // profile is a strict suffix sum
        CHECK(rep.tail_profile.back() == 0.0);
        CHECK(rep.tail_profile.front() == doctest::Approx(0.01 * 0.99).epsilon(1e-12));
    }
}

TEST_CASE("json schema round trip") {
    ThetaFunction theta(MainPart(SineTypeBase::sin_scaled(2.5),
                                 {Complex(0.5, -1.0), Complex(1.0, 0.0)}),
                        FourierTail(2.5, 3, {{-3, Complex(0.1, 0.2)}, {2, Complex(-0.4, 0.0)}}));
    ThetaFunction back = parse_theta(theta_to_json(theta));
    CHECK(back.main().base().type() == doctest::Approx(2.5));
    REQUIRE(back.main().poly_coeffs().size() == 2);
    CHECK(cdist(back.main().poly_coeffs()[0], Complex(0.5, -1.0)) == 0.0);
    CHECK(back.tail().cutoff() == 3);
    CHECK(cdist(back.tail().mode(-3), Complex(0.1, 0.2)) == 0.0);
    CHECK(cdist(back.tail().mode(2), Complex(-0.4, 0.0)) == 0.0);
    CHECK(back.tail().mode(1) == Complex(0.0));
}

TEST_CASE("json validation names the offending ingredient") {
    CHECK_THROWS_AS((void)parse_theta("{"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_theta(R"({"base":{"kind":"sin","b":-1}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_theta(
            R"({"base":{"kind":"sin","b":3.14},"tail":{"M":1,"modes":{"2":[0.1,0]}}})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)parse_theta(R"({"base":{"kind":"sin","b":3.14},"poly":[[0,0],[0,0]]})"),
        std::invalid_argument);
}

TEST_CASE("mode map rejects entries beyond the cutoff") {
    CHECK_THROWS_AS(FourierTail(pi(), 1, {{2, Complex(1.0)}}), std::invalid_argument);
    CHECK_THROWS_AS(FourierTail(-1.0, 0, {}), std::invalid_argument);
}
