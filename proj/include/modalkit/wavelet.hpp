// include/modalkit/wavelet.hpp

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

#ifndef MODALKIT_WAVELET_HPP
#define MODALKIT_WAVELET_HPP

#include <utility>

#include "modalkit/types.hpp"

namespace modalkit::gws {

struct WaveletConfig {
  /// Morlet nondimensional frequency; >= 5 keeps the wavelet analytic in
  /// practice.
  double omega0 = 6.0;
  /// Smallest scale in seconds; 0 means the default 2*dt.
  double s0 = 0.0;
  /// Octave subdivision step (scales follow s0 * 2^(j*dj)).
  double dj = 1.0 / 16.0;
  /// Number of scale steps; 0 sizes the grid to span up to the record
  /// length.
  int num_octave_steps = 0;
  /// Exclude edge-contaminated coefficients (outside the cone of influence)
  /// from time averages. Disable for strict all-times averaging.
  bool coi_exclusion = true;
};

/// Scale of the Morlet voice whose equivalent Fourier frequency is f, and
/// the inverse relation f(s) = (omega0 + sqrt(2 + omega0^2)) / (4*pi*s).
double scale_for_frequency(double f, double omega0);
double frequency_for_scale(double s, double omega0);

/// Complex Morlet continuous wavelet transform, computed per scale in the
/// frequency domain over a power-of-two padded copy. Rows are ordered by
/// ascending equivalent Fourier frequency; `coi_min_freq` marks for each
/// time the lowest edge-clean frequency (filled only when coi_exclusion is
/// on). Expects a detrended record.
TimeFrequencyMap cwt_morlet(const TimeSeries& series,
                            const WaveletConfig& cfg = {});

/// Time average of |W|^2 per frequency row, restricted to the cone of
/// influence when the map carries one. Rows with no edge-clean time average
/// to zero.
PowerSpectrum global_wavelet_spectrum(const TimeFrequencyMap& map);

/// Band-restricted peak of the global spectrum with log-parabolic
/// refinement over the geometric frequency grid, snapped. Throws EmptyBand.
std::pair<double, PowerSpectrum> dominant_mode_gws(const TimeSeries& series,
                                                   const WaveletConfig& cfg,
                                                   const Band& band);

}  // namespace modalkit::gws

#endif  // MODALKIT_WAVELET_HPP
