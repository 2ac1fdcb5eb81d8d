#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qosc {

/// Composite trapezoid rule on a uniform grid.
double trapezoid(const std::vector<double>& values, double dx);
std::complex<double> trapezoid(const std::vector<std::complex<double>>& values, double dx);

/// Cumulative integral of f over the given strictly increasing knots:
/// result[k] = integral from knots[0] to knots[k], via 7-point Gauss-Legendre
/// on each interval. result[0] = 0.
std::vector<double> cumulative_gauss(const std::function<double(double)>& f,
                                     const std::vector<double>& knots);

/// Single-interval 7-point Gauss-Legendre quadrature of f on [a, b].
double gauss7(const std::function<double(double)>& f, double a, double b);

}  // namespace qosc
