// src/peaks.cpp

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

#include "modalkit/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace modalkit::peaks {

namespace {

constexpr double kSnapGrid = 17179869184.0;  // 2^34

// Log of power with a floor so zero bins do not produce -inf; the floor is
// relative to the peak so the offset stays scale-invariant.
double safe_log(double value, double peak_value) {
  const double floor = peak_value * 1e-300;
  return std::log(std::max(value, std::max(floor, 1e-300)));
}

}  // namespace

double parabolic_offset(double ym, double y0, double yp) {
  const double denom = ym - 2.0 * y0 + yp;
  if (!(denom < 0.0)) return 0.0;  // no downward curvature, keep the bin
  const double delta = 0.5 * (ym - yp) / denom;
  return std::clamp(delta, -0.5, 0.5);
}

double snap_hz(double f) {
  if (!std::isfinite(f)) return f;
  return std::round(f * kSnapGrid) / kSnapGrid;
}

std::size_t argmax_in_band(const PowerSpectrum& spectrum, const Band& band) {
  validate_band(band);
  std::size_t best = spectrum.size();
  double best_power = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (!band.contains(spectrum.freqs[i])) continue;
    if (spectrum.power[i] > best_power) {
      best_power = spectrum.power[i];
      best = i;
    }
  }
  if (best == spectrum.size()) {
    throw Error(Errc::EmptyBand, "no spectrum bins inside [" +
                                     std::to_string(band.f_lo) + ", " +
                                     std::to_string(band.f_hi) + "] Hz");
  }
  return best;
}

double refine_uniform_log(const PowerSpectrum& spectrum, std::size_t peak) {
  const double f0 = spectrum.freqs[peak];
  if (peak == 0 || peak + 1 >= spectrum.size()) return snap_hz(f0);
  const double p0 = spectrum.power[peak];
  if (!(p0 > 0.0)) return snap_hz(f0);
  const double ym = safe_log(spectrum.power[peak - 1], p0);
  const double y0 = safe_log(p0, p0);
  const double yp = safe_log(spectrum.power[peak + 1], p0);
  const double step = 0.5 * (spectrum.freqs[peak + 1] - spectrum.freqs[peak - 1]);
  return snap_hz(f0 + parabolic_offset(ym, y0, yp) * step);
}

double refine_geometric_log(const PowerSpectrum& spectrum, std::size_t peak) {
  const double f0 = spectrum.freqs[peak];
  if (peak == 0 || peak + 1 >= spectrum.size()) return snap_hz(f0);
  const double p0 = spectrum.power[peak];
  if (!(p0 > 0.0) || !(f0 > 0.0)) return snap_hz(f0);
  if (!(spectrum.freqs[peak - 1] > 0.0)) return snap_hz(f0);
  const double ym = safe_log(spectrum.power[peak - 1], p0);
  const double y0 = safe_log(p0, p0);
  const double yp = safe_log(spectrum.power[peak + 1], p0);
  const double lf_m = std::log(spectrum.freqs[peak - 1]);
  const double lf_0 = std::log(f0);
  const double lf_p = std::log(spectrum.freqs[peak + 1]);
  const double step = 0.5 * (lf_p - lf_m);
  const double refined = lf_0 + parabolic_offset(ym, y0, yp) * step;
  return snap_hz(std::exp(refined));
}

}  // namespace modalkit::peaks
