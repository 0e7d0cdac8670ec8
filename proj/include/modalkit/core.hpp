// include/modalkit/core.hpp

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

#ifndef MODALKIT_CORE_HPP
#define MODALKIT_CORE_HPP

#include <span>
#include <string>
#include <vector>

#include "modalkit/types.hpp"

namespace modalkit {

/// Checks the TimeSeries invariants and returns the validated record.
/// Throws NonFinite, TooShort (< 4 samples) or BadDt (dt <= 0).
TimeSeries validate_series(std::vector<double> samples, double dt,
                           double t0 = 0.0, const std::string& label = "");

enum class DetrendPolicy {
  kMean,    // subtract the sample mean
  kLinear,  // subtract the least-squares line
  kOffset,  // subtract a fixed constant (e.g. the 60 Hz nominal)
};

/// Removes the trend per policy; length, dt and t0 are unchanged. `f0` is
/// only read for DetrendPolicy::kOffset.
TimeSeries detrend(const TimeSeries& series, DetrendPolicy policy,
                   double f0 = 0.0);

/// Contiguous sub-record of `len_s` seconds starting `start_s` after the
/// record start. Cuts land on the sample grid (nearest sample); the window
/// must lie inside the record and keep >= 4 samples, else OutOfRange.
TimeSeries slice_window(const TimeSeries& series, double start_s, double len_s);

/// Evaluates the damped-sinusoid sum at sample times n*dt, n = 0..n_samples-1:
///   x[n] = sum_k amplitude_k * exp(alpha_k * n * dt) * cos(2*pi*f_k * n * dt + phase_k)
/// An empty mode list yields the all-zero record.
TimeSeries reconstruct(std::span<const Mode> modes, std::size_t n_samples,
                       double dt);

}  // namespace modalkit

#endif  // MODALKIT_CORE_HPP
