#include "sinetype/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sinetype {

const GaussRule& gauss_legendre(int order) {
    if (order < 2 || order > 64) throw std::invalid_argument("unsupported quadrature order");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(std::size_t(order));
    rule.weights.resize(std::size_t(order));
    const double pi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < order; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double x = std::cos(pi * (double(i) + 0.75) / (double(order) + 0.5));
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
                p0 = p1;
                p1 = p2;
            }
            double dp = double(order) * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
            p0 = p1;
            p1 = p2;
        }
        double dp = double(order) * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[std::size_t(i)] = x;
        rule.weights[std::size_t(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

double integrate_real(const std::function<double(double)>& f, double a, double b, int panels,
                      int order) {
    const GaussRule& rule = gauss_legendre(order);
    double total = 0.0;
    const double h = (b - a) / double(panels);
    for (int p = 0; p < panels; ++p) {
        double lo = a + h * double(p);
        double mid = lo + 0.5 * h, half = 0.5 * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += acc * half;
    }
    return total;
}

Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b, int panels,
                          int order) {
    const GaussRule& rule = gauss_legendre(order);
    Complex total = 0.0;
    const double h = (b - a) / double(panels);
    for (int p = 0; p < panels; ++p) {
        double lo = a + h * double(p);
        double mid = lo + 0.5 * h, half = 0.5 * h;
        Complex acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += acc * half;
    }
    return total;
}

} // namespace sinetype
