// src/wavelet.cpp

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

#include "modalkit/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "modalkit/fft.hpp"
#include "modalkit/peaks.hpp"

namespace modalkit::gws {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_config(const WaveletConfig& cfg) {
  if (!(cfg.omega0 >= 5.0)) {
    throw Error(Errc::BadConfig, "omega0 must be >= 5 for a usable Morlet");
  }
  if (!(cfg.dj > 0.0) || cfg.dj > 0.5) {
    throw Error(Errc::BadConfig, "dj must be in (0, 0.5]");
  }
}

}  // namespace

double frequency_for_scale(double s, double omega0) {
  return (omega0 + std::sqrt(2.0 + omega0 * omega0)) / (4.0 * kPi * s);
}

double scale_for_frequency(double f, double omega0) {
  return (omega0 + std::sqrt(2.0 + omega0 * omega0)) / (4.0 * kPi * f);
}

TimeFrequencyMap cwt_morlet(const TimeSeries& series,
                            const WaveletConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = series.size();
  const double dt = series.dt;
  const double s0 = cfg.s0 > 0.0 ? cfg.s0 : 2.0 * dt;

  int steps = cfg.num_octave_steps;
  if (steps <= 0) {
    steps = static_cast<int>(
        std::floor(std::log2(static_cast<double>(n) * dt / s0) / cfg.dj));
    steps = std::max(steps, 1);
  }

  // Scales ascend geometrically; rows are emitted frequency-ascending, so
  // row r uses scale index (steps - r).
  std::vector<double> scales(static_cast<std::size_t>(steps) + 1);
  for (std::size_t j = 0; j < scales.size(); ++j) {
    scales[j] = s0 * std::exp2(cfg.dj * static_cast<double>(j));
  }

  const std::size_t padded = fft::next_pow2(n);
  std::vector<double> frame(padded, 0.0);
  std::copy(series.samples.begin(), series.samples.end(), frame.begin());
  const std::vector<std::complex<double>> spectrum = fft::dft_real(frame);

  // Angular frequencies of the padded grid; only omega > 0 carries the
  // analytic Morlet.
  std::vector<double> omega(padded, 0.0);
  for (std::size_t k = 0; k <= padded / 2; ++k) {
    omega[k] = 2.0 * kPi * static_cast<double>(k) /
               (static_cast<double>(padded) * dt);
  }

  TimeFrequencyMap map;
  map.times.resize(n);
  for (std::size_t j = 0; j < n; ++j) map.times[j] = series.time_at(j);
  map.freqs.resize(scales.size());
  map.values.resize(scales.size() * n);

  const double norm_base = std::pow(kPi, -0.25);
  std::vector<std::complex<double>> shaped(padded);
  for (std::size_t row = 0; row < scales.size(); ++row) {
    const double s = scales[scales.size() - 1 - row];
    map.freqs[row] = frequency_for_scale(s, cfg.omega0);
    const double norm = norm_base *
                        std::sqrt(2.0 * kPi * s / dt);
    for (std::size_t k = 0; k < padded; ++k) {
      if (k >= 1 && k <= padded / 2) {
        const double arg = s * omega[k] - cfg.omega0;
        shaped[k] = spectrum[k] * (norm * std::exp(-0.5 * arg * arg));
      } else {
        shaped[k] = 0.0;
      }
    }
    const std::vector<std::complex<double>> coeffs = fft::idft(shaped);
    const double inv_padded = 1.0 / static_cast<double>(padded);
    for (std::size_t j = 0; j < n; ++j) {
      map.at(row, j) = coeffs[j] * inv_padded;
    }
  }

  if (cfg.coi_exclusion) {
    map.coi_min_freq.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double dist =
          std::min(static_cast<double>(j), static_cast<double>(n - 1 - j)) * dt;
      if (dist <= 0.0) {
        map.coi_min_freq[j] = std::numeric_limits<double>::infinity();
      } else {
        // The Morlet e-folding time is sqrt(2)*s, so the largest edge-clean
        // scale at this time is dist/sqrt(2); store it as a frequency bound.
        map.coi_min_freq[j] =
            frequency_for_scale(dist / std::numbers::sqrt2, cfg.omega0);
      }
    }
  }
  return map;
}

PowerSpectrum global_wavelet_spectrum(const TimeFrequencyMap& map) {
  PowerSpectrum out;
  out.freqs = map.freqs;
  out.power.assign(map.rows(), 0.0);
  const bool use_coi = !map.coi_min_freq.empty();
  for (std::size_t row = 0; row < map.rows(); ++row) {
    double acc = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < map.cols(); ++j) {
      if (use_coi && !(map.freqs[row] >= map.coi_min_freq[j])) continue;
      acc += std::norm(map.at(row, j));
      ++count;
    }
    out.power[row] = count > 0 ? acc / static_cast<double>(count) : 0.0;
  }
  return out;
}

std::pair<double, PowerSpectrum> dominant_mode_gws(const TimeSeries& series,
                                                   const WaveletConfig& cfg,
                                                   const Band& band) {
  validate_band(band);
  const TimeFrequencyMap map = cwt_morlet(series, cfg);
  const PowerSpectrum spectrum = global_wavelet_spectrum(map);
  const std::size_t peak = peaks::argmax_in_band(spectrum, band);
  const double f_dom = peaks::refine_geometric_log(spectrum, peak);

  PowerSpectrum banded;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (!band.contains(spectrum.freqs[i])) continue;
    banded.freqs.push_back(spectrum.freqs[i]);
    banded.power.push_back(spectrum.power[i]);
  }
  return {f_dom, std::move(banded)};
}

}  // namespace modalkit::gws
