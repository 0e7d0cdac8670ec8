// src/stransform.cpp

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

#include "modalkit/stransform.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include "modalkit/fft.hpp"
#include "modalkit/peaks.hpp"

namespace modalkit::st {

namespace {

// Gaussian of voice n over the circular frequency index, periodized over
// one wrap on each side so the window stays symmetric at the seam.
std::vector<double> voice_window(std::size_t n_samples, std::size_t voice) {
  constexpr double two_pi_sq = 2.0 * std::numbers::pi * std::numbers::pi;
  std::vector<double> g(n_samples, 0.0);
  const double inv_n2 =
      1.0 / (static_cast<double>(voice) * static_cast<double>(voice));
  const auto n = static_cast<double>(n_samples);
  for (std::size_t m = 0; m < n_samples; ++m) {
    for (int wrap = -1; wrap <= 1; ++wrap) {
      const double idx = static_cast<double>(m) + wrap * n;
      g[m] += std::exp(-two_pi_sq * idx * idx * inv_n2);
    }
  }
  return g;
}

}  // namespace

TimeFrequencyMap stransform(const TimeSeries& series,
                            std::optional<Band> voices_band) {
  if (voices_band) validate_band(*voices_band);
  const std::size_t n = series.size();
  const double df = 1.0 / (static_cast<double>(n) * series.dt);

  // Mean-normalized spectrum: X[k] = (1/N) sum x e^{-i...}, so the time sum
  // of voice n reproduces the raw DFT coefficient.
  std::vector<std::complex<double>> spectrum = fft::dft_real(series.samples);
  const double mean =
      std::accumulate(series.samples.begin(), series.samples.end(), 0.0) /
      static_cast<double>(n);
  for (auto& v : spectrum) v /= static_cast<double>(n);

  std::vector<std::size_t> voices;
  for (std::size_t v = 0; v <= n / 2; ++v) {
    const double f = static_cast<double>(v) * df;
    if (voices_band && !(voices_band->contains(f))) continue;
    voices.push_back(v);
  }
  if (voices.empty()) {
    throw Error(Errc::EmptyBand, "no voices inside the requested band");
  }

  TimeFrequencyMap map;
  map.times.resize(n);
  for (std::size_t j = 0; j < n; ++j) map.times[j] = series.time_at(j);
  map.freqs.resize(voices.size());
  map.values.resize(voices.size() * n);

  std::vector<std::complex<double>> shifted(n);
  for (std::size_t row = 0; row < voices.size(); ++row) {
    const std::size_t voice = voices[row];
    map.freqs[row] = static_cast<double>(voice) * df;
    if (voice == 0) {
      for (std::size_t j = 0; j < n; ++j) map.at(row, j) = mean;
      continue;
    }
    const std::vector<double> window = voice_window(n, voice);
    for (std::size_t m = 0; m < n; ++m) {
      shifted[m] = spectrum[(voice + m) % n] * window[m];
    }
    const std::vector<std::complex<double>> localized = fft::idft(shifted);
    for (std::size_t j = 0; j < n; ++j) map.at(row, j) = localized[j];
  }
  return map;
}

std::pair<double, PowerSpectrum> dominant_mode_st(const TimeFrequencyMap& map,
                                                  const Band& band) {
  validate_band(band);
  const std::size_t n_times = map.cols();
  const std::size_t margin = n_times / 10;
  const std::size_t first = margin;
  const std::size_t last = n_times - margin;  // exclusive

  PowerSpectrum marginal;
  for (std::size_t row = 0; row < map.rows(); ++row) {
    const double f = map.freqs[row];
    if (f <= 0.0 || !band.contains(f)) continue;
    double acc = 0.0;
    for (std::size_t j = first; j < last; ++j) acc += std::norm(map.at(row, j));
    marginal.freqs.push_back(f);
    marginal.power.push_back(acc / static_cast<double>(last - first));
  }
  if (marginal.freqs.empty()) {
    throw Error(Errc::EmptyBand, "no voices inside [" +
                                     std::to_string(band.f_lo) + ", " +
                                     std::to_string(band.f_hi) + "] Hz");
  }

  std::size_t peak = 0;
  for (std::size_t i = 1; i < marginal.size(); ++i) {
    if (marginal.power[i] > marginal.power[peak]) peak = i;
  }
  const double f_dom = peaks::refine_uniform_log(marginal, peak);
  return {f_dom, std::move(marginal)};
}

}  // namespace modalkit::st
