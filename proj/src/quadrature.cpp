#include "qosc/quadrature.hpp"

#include <array>
#include <stdexcept>

namespace qosc {

namespace {

// 7-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 7> kGl7Nodes = {
    -0.9491079123427585245262, -0.7415311855993944398639, -0.4058451513773971669066,
    0.0,
    0.4058451513773971669066,  0.7415311855993944398639,  0.9491079123427585245262};
constexpr std::array<double, 7> kGl7Weights = {
    0.1294849661688696932706, 0.2797053914892766679015, 0.3818300505051189449504,
    0.4179591836734693877551,
    0.3818300505051189449504, 0.2797053914892766679015, 0.1294849661688696932706};

}  // namespace

double trapezoid(const std::vector<double>& values, double dx) {
  if (values.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * dx;
}

std::complex<double> trapezoid(const std::vector<std::complex<double>>& values, double dx) {
  if (values.size() < 2) throw std::invalid_argument("trapezoid: need at least 2 samples");
  std::complex<double> sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * dx;
}

double gauss7(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t k = 0; k < kGl7Nodes.size(); ++k)
    sum += kGl7Weights[k] * f(mid + half * kGl7Nodes[k]);
  return sum * half;
}

std::vector<double> cumulative_gauss(const std::function<double(double)>& f,
                                     const std::vector<double>& knots) {
  if (knots.size() < 2) throw std::invalid_argument("cumulative_gauss: need at least 2 knots");
  std::vector<double> out(knots.size(), 0.0);
  for (std::size_t i = 1; i < knots.size(); ++i)
    out[i] = out[i - 1] + gauss7(f, knots[i - 1], knots[i]);
  return out;
}

}  // namespace qosc
