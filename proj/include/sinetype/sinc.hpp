#pragma once

/*
 * sinc.hpp — the entire function sinc(t) = sin(t)/t and its derivatives.
 *
 * Every closed-form transform in this library reduces to sinc:
 *
 *   ∫_{-b}^{b} e^{iπkx/b} e^{izx} dx = 2b·sinc(bz + πk),
 *
 * and the ν-th z-derivative of that integral is 2·b^{ν+1}·sinc^{(ν)}(bz + πk).
 * The point t = 0 (z = -πk/b) is a removable singularity; near it we switch
 * from the quotient formula to the Taylor series so the evaluation stays
 * analytic through the lattice.
 */

#include <complex>

namespace sinetype {

using Complex = std::complex<double>;

namespace detail {

// sin(t + j·π/2) without touching π: cycle through {sin, cos, -sin, -cos}.
inline Complex sin_shifted(Complex t, int j) {
    switch (((j % 4) + 4) % 4) {
        case 0: return std::sin(t);
        case 1: return std::cos(t);
        case 2: return -std::sin(t);
        default: return -std::cos(t);
    }
}

inline double binomial(int n, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c *= double(n - i) / double(i + 1);
    return c;
}

// integer power by repeated multiplication; std::pow(complex, ...) is
// undefined-ish at 0^0 and needlessly slow for small exponents
inline Complex ipow(Complex z, int n) {
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

} // namespace detail

// ν-th derivative of sinc at complex t.  |t| >= 1/2 uses the Leibniz rule on
// sin(t)·t^{-1}; smaller |t| uses the Taylor series (terms decay factorially,
// so ~24 terms exhaust double precision).
inline Complex sinc_deriv(Complex t, int nu) {
    if (std::abs(t) >= 0.5) {
        // sum_j C(nu,j) · sin^{(j)}(t) · (-1)^m m! t^{-(m+1)},  m = nu - j
        Complex sum = 0.0;
        for (int j = nu; j >= 0; --j) {
            int m = nu - j;
            double mfact = 1.0;
            for (int i = 2; i <= m; ++i) mfact *= i;
            double coeff = detail::binomial(nu, j) * (m % 2 == 0 ? mfact : -mfact);
            sum += coeff * detail::sin_shifted(t, j) / detail::ipow(t, m + 1);
        }
        return sum;
    }
    // sinc^{(nu)}(t) = sum_{2m >= nu} (-1)^m [(2m)(2m-1)...(2m-nu+1)] t^{2m-nu} / (2m+1)!
    Complex sum = 0.0;
    for (int m = (nu + 1) / 2; m <= (nu + 1) / 2 + 24; ++m) {
        double falling = 1.0;
        for (int i = 0; i < nu; ++i) falling *= double(2 * m - i);
        double fact = 1.0;
        for (int i = 2; i <= 2 * m + 1; ++i) fact *= i;
        Complex term = (m % 2 == 0 ? 1.0 : -1.0) * falling / fact * detail::ipow(t, 2 * m - nu);
        sum += term;
        if (std::abs(term) < 1e-22 * (1.0 + std::abs(sum))) break;
    }
    return sum;
}

inline Complex sinc(Complex t) { return sinc_deriv(t, 0); }

} // namespace sinetype
