#pragma once

/*
 * quadrature.hpp — composite Gauss–Legendre integration.
 *
 * Nodes and weights are generated once per order by Newton iteration on the
 * Legendre recurrence.  Panel sizes are the caller's responsibility; for
 * trigonometric integrands a panel per quarter period is ample.
 */

#include <functional>
#include <vector>

#include "sinetype/sinc.hpp"

namespace sinetype {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

// ∫_a^b f, [a,b] split into `panels` equal panels
double integrate_real(const std::function<double(double)>& f, double a, double b, int panels,
                      int order = 8);

Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b, int panels,
                          int order = 8);

} // namespace sinetype
