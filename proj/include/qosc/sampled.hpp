#pragma once

#include <cstddef>
#include <vector>

namespace qosc {

/// Real function of time stored as (knot, value, derivative) triples.
/// Evaluation between knots uses the C1 cubic Hermite interpolant built
/// from the stored derivatives; evaluation outside [front, back] throws.
class SampledFunction {
 public:
  SampledFunction() = default;
  SampledFunction(std::vector<double> knots, std::vector<double> values,
                  std::vector<double> derivatives);

  [[nodiscard]] std::size_t size() const { return knots_.size(); }
  [[nodiscard]] bool empty() const { return knots_.empty(); }
  [[nodiscard]] const std::vector<double>& knots() const { return knots_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] const std::vector<double>& derivatives() const { return derivs_; }
  [[nodiscard]] double front_time() const;
  [[nodiscard]] double back_time() const;

  /// Interpolated value; reproduces knot values exactly at the knots.
  [[nodiscard]] double value(double t) const;
  /// Derivative of the interpolant; equals the stored derivative at knots.
  [[nodiscard]] double derivative(double t) const;

  [[nodiscard]] bool in_range(double t) const;

  /// Scale values and derivatives by a constant factor.
  void scale(double factor);

 private:
  [[nodiscard]] std::size_t interval_index(double t) const;

  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> derivs_;
};

/// Uniform time grid [t0, t_end] with n knots (n >= 2).
struct TimeGrid {
  double t0 = 0.0;
  double t_end = 1.0;
  std::size_t n = 2001;

  [[nodiscard]] std::vector<double> knots() const;
  [[nodiscard]] double step() const { return (t_end - t0) / static_cast<double>(n - 1); }
};

/// Second derivative at the interior knots of a uniformly sampled function,
/// by 5-point central differences on the stored values. Returns one entry per
/// knot index in [2, size-3]. Used by residual checks that must not trust the
/// interpolant's own derivative data.
std::vector<double> fd_second_derivative_on_knots(const SampledFunction& f);

}  // namespace qosc
