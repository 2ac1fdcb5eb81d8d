#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qosc/sampled.hpp"

namespace qosc {

/// Real function of time together with its first and second derivatives.
/// Presets supply analytic derivatives; `with_numeric_derivatives` fills them
/// in by 4th-order central differences for user-supplied callables.
class TimeFunction {
 public:
  using Fn = std::function<double(double)>;

  TimeFunction() = default;

  static TimeFunction analytic(Fn f, Fn df, Fn d2f);
  static TimeFunction constant(double value);
  /// Derivatives by 4th-order central differences with step 1e-4 * timescale.
  static TimeFunction with_numeric_derivatives(Fn f, double timescale);
  /// Backed by a sampled trajectory (cubic Hermite); second derivative by
  /// finite differences of the interpolant's first derivative.
  static TimeFunction from_samples(SampledFunction samples);

  [[nodiscard]] double value(double t) const { return f_(t); }
  [[nodiscard]] double deriv(double t) const { return df_(t); }
  [[nodiscard]] double deriv2(double t) const { return d2f_(t); }
  [[nodiscard]] bool valid() const { return static_cast<bool>(f_); }

 private:
  Fn f_, df_, d2f_;
};

/// The physical model: mass m(t) > 0, frequency-squared, driving force, the
/// Ermakov constants (a, b, c) and the initial data fixing gamma. Immutable
/// after construction; safe to share across threads.
struct ScenarioSpec {
  std::string name = "custom";
  TimeFunction mass;           // m(t) > 0
  TimeFunction frequency_sq;   // Omega^2(t)
  TimeFunction force;          // F(t)
  std::array<double, 3> ermakov_abc = {1.0, 0.0, 1.0};
  std::array<double, 2> gamma_init = {0.0, 0.0};  // gamma(t0), dgamma/dt(t0)
  double t0 = 0.0;
  double t_end = 10.0;
  std::vector<std::string> notes;  // non-fatal flags raised at construction

  [[nodiscard]] double mu(double t) const;       // sqrt(m)
  [[nodiscard]] double mu_dot(double t) const;
  [[nodiscard]] double mu_ddot(double t) const;
  /// Omega^2 - mu_ddot/mu, the coefficient of the auxiliary linear ODE.
  [[nodiscard]] double effective_freq_sq(double t) const;
};

/// Shipped presets: stationary, parametric_const_mass, caldirola_kanai,
/// driven_const_mass. `params` overrides the preset's free constants
/// (unknown keys are rejected).
ScenarioSpec make_preset(const std::string& name,
                         const std::map<std::string, double>& params = {});

[[nodiscard]] std::vector<std::string> preset_names();

/// Checks m > 0 on a dense grid and the constraint b^2 - 4ac = -4/W0^2.
/// Returns human-readable violations; empty means valid.
std::vector<std::string> validate(const ScenarioSpec& spec, double w0);

}  // namespace qosc
