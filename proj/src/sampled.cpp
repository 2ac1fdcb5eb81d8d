#include "qosc/sampled.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qosc {

SampledFunction::SampledFunction(std::vector<double> knots, std::vector<double> values,
                                 std::vector<double> derivatives)
    : knots_(std::move(knots)), values_(std::move(values)), derivs_(std::move(derivatives)) {
  if (knots_.size() < 2) throw std::invalid_argument("SampledFunction: need at least 2 knots");
  if (values_.size() != knots_.size() || derivs_.size() != knots_.size())
    throw std::invalid_argument("SampledFunction: size mismatch between knots and samples");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (!(knots_[i] > knots_[i - 1]))
      throw std::invalid_argument("SampledFunction: knots must be strictly increasing");
}

double SampledFunction::front_time() const { return knots_.front(); }
double SampledFunction::back_time() const { return knots_.back(); }

bool SampledFunction::in_range(double t) const {
  return !knots_.empty() && t >= knots_.front() && t <= knots_.back();
}

std::size_t SampledFunction::interval_index(double t) const {
  if (!in_range(t))
    throw std::out_of_range("SampledFunction: t=" + std::to_string(t) + " outside [" +
                            std::to_string(knots_.front()) + ", " + std::to_string(knots_.back()) +
                            "]");
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  std::size_t i = static_cast<std::size_t>(it - knots_.begin());
  if (i > 0) --i;
  if (i >= knots_.size() - 1) i = knots_.size() - 2;
  return i;
}

double SampledFunction::value(double t) const {
  const std::size_t i = interval_index(t);
  const double h = knots_[i + 1] - knots_[i];
  const double s = (t - knots_[i]) / h;
  if (s == 0.0) return values_[i];
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * values_[i] + h10 * h * derivs_[i] + h01 * values_[i + 1] + h11 * h * derivs_[i + 1];
}

double SampledFunction::derivative(double t) const {
  const std::size_t i = interval_index(t);
  const double h = knots_[i + 1] - knots_[i];
  const double s = (t - knots_[i]) / h;
  if (s == 0.0) return derivs_[i];
  const double s2 = s * s;
  const double dh00 = (6 * s2 - 6 * s) / h;
  const double dh10 = 3 * s2 - 4 * s + 1;
  const double dh01 = (-6 * s2 + 6 * s) / h;
  const double dh11 = 3 * s2 - 2 * s;
  return dh00 * values_[i] + dh10 * derivs_[i] + dh01 * values_[i + 1] + dh11 * derivs_[i + 1];
}

void SampledFunction::scale(double factor) {
  for (auto& v : values_) v *= factor;
  for (auto& d : derivs_) d *= factor;
}

std::vector<double> TimeGrid::knots() const {
  if (n < 2) throw std::invalid_argument("TimeGrid: need at least 2 knots");
  if (!(t_end > t0)) throw std::invalid_argument("TimeGrid: t_end must exceed t0");
  std::vector<double> out(n);
  const double h = step();
  for (std::size_t i = 0; i < n; ++i) out[i] = t0 + static_cast<double>(i) * h;
  out.back() = t_end;
  return out;
}

std::vector<double> fd_second_derivative_on_knots(const SampledFunction& f) {
  const auto& t = f.knots();
  const auto& v = f.values();
  if (t.size() < 5) throw std::invalid_argument("fd_second_derivative_on_knots: need >= 5 knots");
  const double h = t[1] - t[0];
  std::vector<double> out;
  out.reserve(t.size() - 4);
  for (std::size_t i = 2; i + 2 < t.size(); ++i) {
    out.push_back((-v[i - 2] + 16 * v[i - 1] - 30 * v[i] + 16 * v[i + 1] - v[i + 2]) /
                  (12 * h * h));
  }
  return out;
}

}  // namespace qosc
