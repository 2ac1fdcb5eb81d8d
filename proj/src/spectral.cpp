#include "qosc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qosc {

namespace {

// One cached plan pair per transform size. Plans are created with
// FFTW_ESTIMATE (deterministic plan choice) and FFTW_UNALIGNED so they can be
// executed on any caller-owned buffers via the new-array interface, which is
// thread-safe once the plan exists.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<cdouble> scratch_in(n), scratch_out(n);
  auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
  auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
  PlanPair p;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.forward = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_FORWARD, flags);
  p.inverse = fftw_plan_dft_1d(static_cast<int>(n), in, out, FFTW_BACKWARD, flags);
  if (!p.forward || !p.inverse) throw std::runtime_error("fft: plan creation failed");
  return cache.emplace(n, p).first->second;
}

std::vector<cdouble> execute(const std::vector<cdouble>& in, bool forward) {
  if (in.empty()) throw std::invalid_argument("fft: empty input");
  auto& plans = plans_for(in.size());
  std::vector<cdouble> src(in);
  std::vector<cdouble> dst(in.size());
  fftw_execute_dft(forward ? plans.forward : plans.inverse,
                   reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(dst.data()));
  return dst;
}

}  // namespace

std::vector<cdouble> fft_forward(const std::vector<cdouble>& in) { return execute(in, true); }

std::vector<cdouble> fft_inverse(const std::vector<cdouble>& in) {
  auto out = execute(in, false);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<double> fft_wavenumbers(std::size_t n, double length) {
  if (n == 0 || !(length > 0)) throw std::invalid_argument("fft_wavenumbers: bad arguments");
  std::vector<double> k(n);
  const double dk = 2.0 * M_PI / length;
  for (std::size_t i = 0; i < n; ++i) {
    const auto signed_index =
        (i <= n / 2) ? static_cast<double>(i) : static_cast<double>(i) - static_cast<double>(n);
    k[i] = dk * signed_index;
  }
  return k;
}

std::vector<cdouble> spectral_derivative(const std::vector<cdouble>& values, double period_length,
                                         int order) {
  if (order != 1 && order != 2) throw std::invalid_argument("spectral_derivative: order 1 or 2");
  const std::size_t n = values.size();
  auto hat = fft_forward(values);
  const auto k = fft_wavenumbers(n, period_length);
  if (order == 1) {
    const cdouble iunit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) hat[i] *= iunit * k[i];
    if (n % 2 == 0) hat[n / 2] = 0.0;  // Nyquist mode has no well-defined odd derivative
  } else {
    for (std::size_t i = 0; i < n; ++i) hat[i] *= -k[i] * k[i];
  }
  return fft_inverse(hat);
}

std::vector<cdouble> fd4_second_derivative(const std::vector<cdouble>& values, double dx) {
  const std::size_t n = values.size();
  if (n < 5) throw std::invalid_argument("fd4_second_derivative: need >= 5 samples");
  std::vector<cdouble> out(n);
  const double inv = 1.0 / (12.0 * dx * dx);
  auto at = [&](std::ptrdiff_t i) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return values[static_cast<std::size_t>(((i % m) + m) % m)];
  };
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    out[static_cast<std::size_t>(i)] =
        (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * at(i) + 16.0 * at(i + 1) - at(i + 2)) * inv;
  }
  return out;
}

}  // namespace qosc
