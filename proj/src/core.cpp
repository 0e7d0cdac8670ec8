// src/core.cpp

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

#include "modalkit/core.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace modalkit {

TimeSeries validate_series(std::vector<double> samples, double dt, double t0,
                           const std::string& label) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(Errc::BadDt, "sampling interval must be positive, got " +
                                 std::to_string(dt));
  }
  if (samples.size() < 4) {
    throw Error(Errc::TooShort, "need at least 4 samples, got " +
                                    std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!std::isfinite(samples[i])) {
      throw Error(Errc::NonFinite,
                  "sample " + std::to_string(i) + " is not finite");
    }
  }
  if (!std::isfinite(t0)) {
    throw Error(Errc::NonFinite, "t0 is not finite");
  }
  return TimeSeries{std::move(samples), dt, t0, label};
}

TimeSeries detrend(const TimeSeries& series, DetrendPolicy policy, double f0) {
  TimeSeries out = series;
  const std::size_t n = out.samples.size();
  switch (policy) {
    case DetrendPolicy::kMean: {
      const double mean =
          std::accumulate(out.samples.begin(), out.samples.end(), 0.0) /
          static_cast<double>(n);
      for (double& x : out.samples) x -= mean;
      break;
    }
    case DetrendPolicy::kLinear: {
      // Least-squares line over the centered index to keep the normal
      // equations diagonal: x[i] ~ a + b*(i - (n-1)/2).
      const double c = 0.5 * static_cast<double>(n - 1);
      double sy = 0.0, sty = 0.0, stt = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) - c;
        sy += out.samples[i];
        sty += t * out.samples[i];
        stt += t * t;
      }
      const double a = sy / static_cast<double>(n);
      const double b = stt > 0.0 ? sty / stt : 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        out.samples[i] -= a + b * (static_cast<double>(i) - c);
      }
      break;
    }
    case DetrendPolicy::kOffset: {
      for (double& x : out.samples) x -= f0;
      break;
    }
  }
  return out;
}

TimeSeries slice_window(const TimeSeries& series, double start_s,
                        double len_s) {
  const auto n = static_cast<long long>(series.samples.size());
  const long long i0 = std::llround(start_s / series.dt);
  const long long count = std::llround(len_s / series.dt);
  if (i0 < 0 || count < 4 || i0 + count > n) {
    throw Error(Errc::OutOfRange,
                "window [" + std::to_string(start_s) + ", " +
                    std::to_string(start_s + len_s) + ") s does not fit in a " +
                    std::to_string(series.duration()) + " s record");
  }
  TimeSeries out;
  out.samples.assign(series.samples.begin() + i0,
                     series.samples.begin() + i0 + count);
  out.dt = series.dt;
  out.t0 = series.t0 + static_cast<double>(i0) * series.dt;
  out.label = series.label;
  return out;
}

TimeSeries reconstruct(std::span<const Mode> modes, std::size_t n_samples,
                       double dt) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  TimeSeries out;
  out.samples.assign(n_samples, 0.0);
  out.dt = dt;
  for (const Mode& mode : modes) {
    for (std::size_t i = 0; i < n_samples; ++i) {
      const double t = static_cast<double>(i) * dt;
      out.samples[i] += mode.amplitude * std::exp(mode.alpha * t) *
                        std::cos(two_pi * mode.f * t + mode.phase);
    }
  }
  return out;
}

}  // namespace modalkit
