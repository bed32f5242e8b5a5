#pragma once

// Brute-force reference values built without the library's closed forms:
// the log-normal transition density is written out directly and integrated
// with adaptive Gauss-Kronrod.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

namespace gsr::test {

// K_inf(x, y) for the Gaussian mean shift with psi(x) = s.
inline double reference_density(double theta, double s, double y) {
    if (y <= 0.0 || s <= 0.0) return 0.0;
    double z = (std::log(y / s) + theta * theta / 2.0) / theta;
    return std::exp(-z * z / 2.0) / (std::sqrt(2.0 * std::numbers::pi) * y * theta);
}

template <typename F>
double integrate(F f, double a, double b) {
    if (b <= a) return 0.0;
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13, &err);
}

// Fixed composite 20-point Gauss-Legendre, for integrands too noisy for an
// adaptive rule (finite-difference densities).
template <typename F>
double integrate_panels(F f, double a, double b, int panels) {
    double total = 0.0, w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        total += boost::math::quadrature::gauss<double, 20>::integrate(f, a + p * w, a + (p + 1) * w);
    }
    return total;
}

// int_0^A K_inf(x, y) phi_j(y) dy with phi_j the hat on `nodes`. Substituting
// y = s * exp(u) turns K_inf dy into a Gaussian density in u, which the
// adaptive rule resolves quickly; the lower tail below 40 sd is dropped.
inline double reference_hat_entry(double theta, double s, std::span<const double> nodes, std::size_t j) {
    const double mean = -theta * theta / 2.0;
    const double u_min = mean - 40.0 * theta;
    auto gauss = [&](double u) {
        double z = (u - mean) / theta;
        return std::exp(-z * z / 2.0) / (std::sqrt(2.0 * std::numbers::pi) * theta);
    };
    auto to_u = [&](double y) { return y > 0.0 ? std::max(std::log(y / s), u_min) : u_min; };
    double total = 0.0;
    if (j > 0) {
        double a = nodes[j - 1], b = nodes[j];
        total += integrate([&](double u) { return gauss(u) * (s * std::exp(u) - a) / (b - a); }, to_u(a), to_u(b));
    }
    if (j + 1 < nodes.size()) {
        double a = nodes[j], b = nodes[j + 1];
        total += integrate([&](double u) { return gauss(u) * (b - s * std::exp(u)) / (b - a); }, to_u(a), to_u(b));
    }
    return total;
}

}  // namespace gsr::test
