// include/modalkit/fourier.hpp

// Copyright 2026 modal-kit authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef MODALKIT_FOURIER_HPP
#define MODALKIT_FOURIER_HPP

#include <utility>
#include <vector>

#include "modalkit/types.hpp"

namespace modalkit::fourier {

struct FourierConfig {
  /// Window std as a fraction of the half frame: sigma = factor * (N-1)/2
  /// samples.
  double gaussian_window_factor = 0.3;
  /// The frame is zero-padded to this multiple of its length before the
  /// transform, to resolve peaks beyond the bare 1/duration bin width.
  int zero_pad_factor = 4;
};

/// The Gaussian taper w[n] = exp(-0.5 * ((n - (N-1)/2) / sigma)^2).
std::vector<double> gaussian_window(std::size_t n, double factor);

/// One-sided power spectrum |X[k]|^2 of the Gaussian-windowed, zero-padded
/// frame, at frequencies k/(M*dt), k = 0..M/2. Expects a detrended record.
PowerSpectrum power_spectrum(const TimeSeries& series,
                             const FourierConfig& cfg = {});

/// In-band spectral peak, refined by three-point parabolic interpolation on
/// log power. Returns the refined frequency and the full spectrum.
/// Throws EmptyBand when no bin lies inside the band.
std::pair<double, PowerSpectrum> dominant_mode_fft(const TimeSeries& series,
                                                   const FourierConfig& cfg,
                                                   const Band& band);

}  // namespace modalkit::fourier

#endif  // MODALKIT_FOURIER_HPP
