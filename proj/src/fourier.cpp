// src/fourier.cpp

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

#include "modalkit/fourier.hpp"

#include <cmath>
#include <complex>

#include "modalkit/fft.hpp"
#include "modalkit/peaks.hpp"

namespace modalkit::fourier {

namespace {

void validate_config(const FourierConfig& cfg) {
  if (!(cfg.gaussian_window_factor > 0.0) || cfg.gaussian_window_factor > 1.0) {
    throw Error(Errc::BadConfig, "gaussian_window_factor must be in (0, 1]");
  }
  if (cfg.zero_pad_factor < 1) {
    throw Error(Errc::BadConfig, "zero_pad_factor must be >= 1");
  }
}

}  // namespace

std::vector<double> gaussian_window(std::size_t n, double factor) {
  std::vector<double> w(n, 1.0);
  if (n < 2) return w;
  const double center = 0.5 * static_cast<double>(n - 1);
  const double sigma = factor * center;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (static_cast<double>(i) - center) / sigma;
    w[i] = std::exp(-0.5 * z * z);
  }
  return w;
}

PowerSpectrum power_spectrum(const TimeSeries& series,
                             const FourierConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = series.size();
  const std::vector<double> window =
      gaussian_window(n, cfg.gaussian_window_factor);

  const std::size_t padded = n * static_cast<std::size_t>(cfg.zero_pad_factor);
  std::vector<double> frame(padded, 0.0);
  for (std::size_t i = 0; i < n; ++i) frame[i] = series.samples[i] * window[i];

  const std::vector<std::complex<double>> spec = fft::dft_real(frame);

  PowerSpectrum out;
  const std::size_t bins = padded / 2 + 1;
  out.freqs.resize(bins);
  out.power.resize(bins);
  const double df = 1.0 / (static_cast<double>(padded) * series.dt);
  for (std::size_t k = 0; k < bins; ++k) {
    out.freqs[k] = static_cast<double>(k) * df;
    out.power[k] = std::norm(spec[k]);
  }
  return out;
}

std::pair<double, PowerSpectrum> dominant_mode_fft(const TimeSeries& series,
                                                   const FourierConfig& cfg,
                                                   const Band& band) {
  PowerSpectrum spectrum = power_spectrum(series, cfg);
  const std::size_t peak = peaks::argmax_in_band(spectrum, band);
  const double f_dom = peaks::refine_uniform_log(spectrum, peak);
  return {f_dom, std::move(spectrum)};
}

}  // namespace modalkit::fourier
