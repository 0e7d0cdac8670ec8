// include/modalkit/types.hpp

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

#ifndef MODALKIT_TYPES_HPP
#define MODALKIT_TYPES_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace modalkit {

/// Error codes carried by modalkit::Error. One code per failure mode the
/// library promises to clients; everything else is a logic error.
enum class Errc {
  NonFinite,
  TooShort,
  BadDt,
  OutOfRange,
  AliasedMode,
  EmptyBand,
  IllConditioned,
  OrderTooHigh,
  NoModeInBand,
  BadPencilParameter,
  RankZero,
  WindowTooLong,
  TooFewExtrema,
  ParseError,
  NonUniformSampling,
  EmptyFile,
  NoMethodsSelected,
  IoError,
  BadBand,
  BadConfig,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Uniformly sampled real-valued record. `samples[i]` is taken at time
/// `t0 + i*dt`; `duration()` counts a full dt per sample so a 600-sample
/// record at dt=0.1 spans 60 s.
struct TimeSeries {
  std::vector<double> samples;
  double dt = 1.0;
  double t0 = 0.0;
  std::string label;

  std::size_t size() const { return samples.size(); }
  double duration() const { return static_cast<double>(samples.size()) * dt; }
  double nyquist() const { return 0.5 / dt; }
  double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

/// One damped sinusoid A * e^{alpha * t} * cos(2*pi*f*t + phase).
/// Complex-conjugate pole pairs are always collapsed into a single entry with
/// f >= 0; `amplitude` is the full real-cosine amplitude (no hidden factor 2).
struct Mode {
  double f = 0.0;          // Hz, >= 0
  double alpha = 0.0;      // 1/s, negative = decaying
  double amplitude = 0.0;  // signal units, >= 0
  double phase = 0.0;      // rad in (-pi, pi]
  double energy = 0.0;     // amplitude^2 * integral of squared envelope
};

/// Analysis band in Hz. Default covers the low-frequency electromechanical
/// range.
struct Band {
  double f_lo = 0.05;
  double f_hi = 5.0;

  bool contains(double f) const { return f >= f_lo && f <= f_hi; }
};

/// Throws Errc::BadBand unless 0 <= f_lo < f_hi.
void validate_band(const Band& band);

/// Frequency bins with non-negative power values; freqs strictly ascending.
struct PowerSpectrum {
  std::vector<double> freqs;
  std::vector<double> power;

  std::size_t size() const { return freqs.size(); }
};

/// Complex matrix over (time, frequency); rows are frequencies, columns are
/// times. `coi_min_freq`, when non-empty, gives per-time the lowest frequency
/// free of edge effects (cone of influence); rows below it at that time are
/// edge-contaminated.
struct TimeFrequencyMap {
  std::vector<double> times;
  std::vector<double> freqs;
  std::vector<std::complex<double>> values;  // row-major, freqs.size() x times.size()
  std::vector<double> coi_min_freq;

  std::size_t rows() const { return freqs.size(); }
  std::size_t cols() const { return times.size(); }
  std::complex<double>& at(std::size_t row, std::size_t col) {
    return values[row * times.size() + col];
  }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return values[row * times.size() + col];
  }
};

/// Wraps an angle into (-pi, pi].
double normalize_phase(double phase);

}  // namespace modalkit

#endif  // MODALKIT_TYPES_HPP
