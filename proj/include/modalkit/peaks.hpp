// include/modalkit/peaks.hpp

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

#ifndef MODALKIT_PEAKS_HPP
#define MODALKIT_PEAKS_HPP

#include <cstddef>

#include "modalkit/types.hpp"

namespace modalkit::peaks {

/// Vertex offset of the parabola through (-1, ym), (0, y0), (+1, yp),
/// clamped into [-0.5, 0.5]; 0 when the points carry no curvature.
double parabolic_offset(double ym, double y0, double yp);

/// Snaps a frequency onto a fixed 2^-34 Hz grid (~6e-11 Hz). Reported
/// dominant frequencies all pass through this, so rescaled copies of an
/// input cannot disagree in the last bits.
double snap_hz(double f);

/// Index of the maximum power bin with freqs[i] inside the band.
/// Throws EmptyBand when no bin falls inside.
std::size_t argmax_in_band(const PowerSpectrum& spectrum, const Band& band);

/// Dominant frequency of a uniformly gridded spectrum: in-band argmax, then
/// a three-point parabolic refinement on log-power using grid neighbors
/// (also ones just outside the band), snapped onto the reporting grid.
double refine_uniform_log(const PowerSpectrum& spectrum, std::size_t peak);

/// Same refinement for a geometric frequency grid: the parabola is fitted
/// over log-frequency, so the result is exp-interpolated.
double refine_geometric_log(const PowerSpectrum& spectrum, std::size_t peak);

}  // namespace modalkit::peaks

#endif  // MODALKIT_PEAKS_HPP
