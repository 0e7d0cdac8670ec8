// include/modalkit/stransform.hpp

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

#ifndef MODALKIT_STRANSFORM_HPP
#define MODALKIT_STRANSFORM_HPP

#include <optional>
#include <utility>

#include "modalkit/types.hpp"

namespace modalkit::st {

/// Discrete Stockwell transform through the spectral formulation: voice n
/// holds the inverse DFT of the signal spectrum shifted by n and shaped by
/// the voice's Gaussian (periodized over the circular frequency index).
/// Voice 0 is the signal mean. Rows cover 0..N/2 voices at n/(N*dt) Hz, or
/// only the voices inside `voices_band` when given (the O(N^2) full map can
/// be trimmed to the analysis band). The time sum of each voice row equals
/// the corresponding DFT coefficient; that identity is the correctness gate.
/// Expects a detrended record.
TimeFrequencyMap stransform(const TimeSeries& series,
                            std::optional<Band> voices_band = std::nullopt);

/// Dominant frequency of the map: per-voice time average of |S|^2 with 10%
/// of the columns dropped at each end (the circular window contaminates
/// edges), band-restricted argmax, parabolic refinement over the uniform
/// voice grid, snapped. The DC voice never wins. Also returns the
/// band-restricted marginal spectrum. Throws EmptyBand.
std::pair<double, PowerSpectrum> dominant_mode_st(const TimeFrequencyMap& map,
                                                  const Band& band);

}  // namespace modalkit::st

#endif  // MODALKIT_STRANSFORM_HPP
