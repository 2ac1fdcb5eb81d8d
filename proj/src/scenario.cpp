#include "qosc/scenario.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace qosc {

TimeFunction TimeFunction::analytic(Fn f, Fn df, Fn d2f) {
  TimeFunction out;
  out.f_ = std::move(f);
  out.df_ = std::move(df);
  out.d2f_ = std::move(d2f);
  return out;
}

TimeFunction TimeFunction::constant(double value) {
  return analytic([value](double) { return value; }, [](double) { return 0.0; },
                  [](double) { return 0.0; });
}

TimeFunction TimeFunction::with_numeric_derivatives(Fn f, double timescale) {
  if (!(timescale > 0)) throw std::invalid_argument("TimeFunction: timescale must be positive");
  const double h = 1e-4 * timescale;
  TimeFunction out;
  out.f_ = f;
  out.df_ = [f, h](double t) {
    return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
  };
  out.d2f_ = [f, h](double t) {
    return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) /
           (12 * h * h);
  };
  return out;
}

TimeFunction TimeFunction::from_samples(SampledFunction samples) {
  auto shared = std::make_shared<SampledFunction>(std::move(samples));
  const double h = 1e-4 * (shared->back_time() - shared->front_time());
  TimeFunction out;
  out.f_ = [shared](double t) { return shared->value(t); };
  out.df_ = [shared](double t) { return shared->derivative(t); };
  out.d2f_ = [shared, h](double t) {
    // keep the stencil inside the sampled range
    double lo = shared->front_time(), hi = shared->back_time();
    double tc = std::min(std::max(t, lo + 2 * h), hi - 2 * h);
    return (-shared->derivative(tc + 2 * h) + 8 * shared->derivative(tc + h) -
            8 * shared->derivative(tc - h) + shared->derivative(tc - 2 * h)) /
           (12 * h);
  };
  return out;
}

double ScenarioSpec::mu(double t) const { return std::sqrt(mass.value(t)); }

double ScenarioSpec::mu_dot(double t) const { return mass.deriv(t) / (2.0 * mu(t)); }

double ScenarioSpec::mu_ddot(double t) const {
  const double m = mass.value(t);
  const double md = mass.deriv(t);
  const double mdd = mass.deriv2(t);
  const double root = std::sqrt(m);
  return mdd / (2.0 * root) - md * md / (4.0 * m * root);
}

double ScenarioSpec::effective_freq_sq(double t) const {
  return frequency_sq.value(t) - mu_ddot(t) / mu(t);
}

namespace {

double take(std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

void reject_leftovers(const std::map<std::string, double>& params, const std::string& preset) {
  if (params.empty()) return;
  std::string msg = "make_preset(" + preset + "): unknown parameter(s):";
  for (const auto& [k, v] : params) msg += " " + k;
  throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"stationary", "parametric_const_mass", "caldirola_kanai", "driven_const_mass"};
}

ScenarioSpec make_preset(const std::string& name, const std::map<std::string, double>& params) {
  std::map<std::string, double> p = params;
  ScenarioSpec spec;
  spec.name = name;
  spec.t0 = take(p, "t0", 0.0);
  spec.t_end = take(p, "t_end", 10.0);
  if (!(spec.t_end > spec.t0))
    throw std::invalid_argument("make_preset: t_end must exceed t0");
  spec.gamma_init = {take(p, "gamma0", 0.0), take(p, "gamma_dot0", 0.0)};
  // Defaults a = c = 1/W0, b = 0 with the solver convention W0 = 1; this
  // satisfies b^2 - 4ac = -4/W0^2 and makes sigma identically 1 in the
  // stationary limit.
  spec.ermakov_abc = {take(p, "a", 1.0), take(p, "b", 0.0), take(p, "c", 1.0)};

  if (name == "stationary") {
    spec.mass = TimeFunction::constant(1.0);
    spec.frequency_sq = TimeFunction::constant(1.0);
    spec.force = TimeFunction::constant(0.0);
  } else if (name == "parametric_const_mass") {
    const double omega0_sq = take(p, "omega0_sq", 1.0);
    const double depth = take(p, "mod_depth", 0.1);
    const double mod = take(p, "mod_freq", 3.0);
    spec.mass = TimeFunction::constant(1.0);
    spec.frequency_sq = TimeFunction::analytic(
        [=](double t) { return omega0_sq * (1.0 + depth * std::cos(mod * t)); },
        [=](double t) { return -omega0_sq * depth * mod * std::sin(mod * t); },
        [=](double t) { return -omega0_sq * depth * mod * mod * std::cos(mod * t); });
    spec.force = TimeFunction::constant(0.0);
  } else if (name == "caldirola_kanai") {
    const double kappa = take(p, "kappa", 0.1);
    const double omega_sq = take(p, "omega_sq", 1.0);
    spec.mass = TimeFunction::analytic(
        [=](double t) { return std::exp(2.0 * kappa * t); },
        [=](double t) { return 2.0 * kappa * std::exp(2.0 * kappa * t); },
        [=](double t) { return 4.0 * kappa * kappa * std::exp(2.0 * kappa * t); });
    spec.frequency_sq = TimeFunction::constant(omega_sq);
    spec.force = TimeFunction::constant(0.0);
    if (kappa * kappa >= omega_sq)
      spec.notes.push_back("caldirola_kanai: kappa^2 >= Omega^2, effective frequency is "
                           "non-oscillatory");
  } else if (name == "driven_const_mass") {
    const double amp = take(p, "force_amp", 0.5);
    const double freq = take(p, "force_freq", 2.0);
    spec.mass = TimeFunction::constant(1.0);
    spec.frequency_sq = TimeFunction::constant(1.0);
    spec.force = TimeFunction::analytic(
        [=](double t) { return amp * std::cos(freq * t); },
        [=](double t) { return -amp * freq * std::sin(freq * t); },
        [=](double t) { return -amp * freq * freq * std::cos(freq * t); });
  } else {
    std::string msg = "make_preset: unknown preset '" + name + "'; valid:";
    for (const auto& n : preset_names()) msg += " " + n;
    throw std::invalid_argument(msg);
  }
  reject_leftovers(p, name);
  return spec;
}

std::vector<std::string> validate(const ScenarioSpec& spec, double w0) {
  if (w0 == 0.0) throw std::invalid_argument("validate: W0 must be nonzero");
  std::vector<std::string> violations;
  if (!spec.mass.valid() || !spec.frequency_sq.valid() || !spec.force.valid())
    violations.push_back("scenario functions not fully specified");
  if (!(spec.t_end > spec.t0)) violations.push_back("t_end must exceed t0");
  if (!violations.empty()) return violations;

  constexpr int kSamples = 1000;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = spec.t0 + (spec.t_end - spec.t0) * i / kSamples;
    if (!(spec.mass.value(t) > 0.0)) {
      violations.push_back("mass must stay positive; m(" + std::to_string(t) +
                           ") = " + std::to_string(spec.mass.value(t)));
      break;
    }
  }

  const auto [a, b, c] = spec.ermakov_abc;
  if (a < 0.0 || b < 0.0 || c < 0.0)
    violations.push_back("Ermakov constants (a, b, c) must be nonnegative");
  const double target = -4.0 / (w0 * w0);
  const double defect = b * b - 4.0 * a * c - target;
  if (std::abs(defect) > 1e-10 * std::max(1.0, -target))
    violations.push_back("constraint b^2 - 4ac = -4/W0^2 broken (defect " +
                         std::to_string(defect) + ")");
  return violations;
}

}  // namespace qosc
