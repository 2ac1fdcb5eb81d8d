#pragma once

#include <complex>
#include <vector>

namespace qosc {

using cdouble = std::complex<double>;

/// In-place FFT pair on complex samples. Plans are cached per size and are
/// safe to use concurrently from multiple threads.
std::vector<cdouble> fft_forward(const std::vector<cdouble>& in);
std::vector<cdouble> fft_inverse(const std::vector<cdouble>& in);  // normalized by 1/N

/// Fourier wavenumbers for n samples over a periodic domain of the given
/// length, in FFT ordering (0, 1, ..., n/2, -(n/2-1), ..., -1) * 2*pi/length.
std::vector<double> fft_wavenumbers(std::size_t n, double length);

/// Spectral derivative of periodic samples: order 1 or 2.
/// The odd-order Nyquist mode is zeroed, the usual convention.
std::vector<cdouble> spectral_derivative(const std::vector<cdouble>& values, double period_length,
                                         int order);

/// 4th-order central finite-difference second derivative with periodic wrap;
/// cross-check route for fields that decay at the grid edges.
std::vector<cdouble> fd4_second_derivative(const std::vector<cdouble>& values, double dx);

}  // namespace qosc
