#pragma once

/*
 * base.hpp — sine-type base functions S₀ and their zero lattices.
 *
 * A base S₀ is an entire function of exponential type b whose modulus obeys
 * c < |S₀(z)|·e^{-|Im z|·b} < C on horizontal lines away from the real axis,
 * with simple, asymptotically separated real zeros {z_n⁰}_{n≥1}.
 *
 * The canonical base is sin(bz) with lattice {kπ/b : k ∈ ℤ}, enumerated as
 *   z₁⁰ = 0,  z_{2k}⁰ = kπ/b,  z_{2k+1}⁰ = -kπ/b   (k ≥ 1),
 * i.e. ordered by modulus with the positive point first.
 */

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

#include "sinetype/sinc.hpp"

namespace sinetype {

enum class BaseKind { SinScaled, Custom };

class SineTypeBase {
public:
    // evaluator(z, nu) -> S₀^{(nu)}(z); lattice(n) -> z_n⁰ for n >= 1
    using Evaluator = std::function<Complex(Complex, int)>;
    using LatticeFn = std::function<Complex(int)>;

    static SineTypeBase sin_scaled(double b) {
        if (!(b > 0.0)) throw std::invalid_argument("base type b must be positive");
        SineTypeBase s;
        s.kind_ = BaseKind::SinScaled;
        s.b_ = b;
        s.separation_ = pi() / b;
        return s;
    }

    static SineTypeBase custom(double b, Evaluator eval, LatticeFn lattice, double separation) {
        if (!(b > 0.0)) throw std::invalid_argument("base type b must be positive");
        if (!eval || !lattice) throw std::invalid_argument("custom base needs evaluator and lattice");
        if (!(separation > 0.0)) throw std::invalid_argument("lattice separation must be positive");
        SineTypeBase s;
        s.kind_ = BaseKind::Custom;
        s.b_ = b;
        s.eval_ = std::move(eval);
        s.lattice_ = std::move(lattice);
        s.separation_ = separation;
        return s;
    }

    BaseKind kind() const { return kind_; }
    double type() const { return b_; }          // exponential type b
    double separation() const { return separation_; }

    // S₀^{(nu)}(z), nu <= 2
    Complex eval(Complex z, int deriv_order = 0) const {
        if (deriv_order < 0 || deriv_order > 2)
            throw std::invalid_argument("unsupported deriv_order for base evaluation");
        if (kind_ == BaseKind::SinScaled) {
            double bn = 1.0;
            for (int i = 0; i < deriv_order; ++i) bn *= b_;
            return bn * detail::sin_shifted(b_ * z, deriv_order);
        }
        return eval_(z, deriv_order);
    }

    // z_n⁰ for n >= 1
    Complex lattice_point(int n) const {
        if (n < 1) throw std::invalid_argument("base lattice index starts at 1");
        if (kind_ == BaseKind::SinScaled) {
            if (n == 1) return 0.0;
            int k = n / 2;
            double p = double(k) * pi() / b_;
            return (n % 2 == 0) ? Complex(p, 0.0) : Complex(-p, 0.0);
        }
        return lattice_(n);
    }

    static double pi() { return 3.141592653589793238462643383279502884; }

private:
    SineTypeBase() = default;

    BaseKind kind_ = BaseKind::SinScaled;
    double b_ = 1.0;
    double separation_ = 1.0;
    Evaluator eval_;
    LatticeFn lattice_;
};

struct SamplingGrid {
    double re_min = -20.0;
    double re_max = 20.0;
    int count = 512;
};

struct SineTypeBounds {
    double c_est = 0.0;
    double C_est = 0.0;
};

// Samples |S₀(z)|·e^{-|Im z|·b} along the lines Im z = ±K and reports the
// extremes; a c_est collapsing toward zero flags a base that is not sine-type.
SineTypeBounds verify_sine_type(const SineTypeBase& base, double K, const SamplingGrid& grid);

} // namespace sinetype
