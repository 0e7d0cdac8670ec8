// include/modalkit/harness.hpp

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

#ifndef MODALKIT_HARNESS_HPP
#define MODALKIT_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "modalkit/core.hpp"
#include "modalkit/fourier.hpp"
#include "modalkit/hht.hpp"
#include "modalkit/matrix_pencil.hpp"
#include "modalkit/prony.hpp"
#include "modalkit/types.hpp"
#include "modalkit/wavelet.hpp"

namespace modalkit::harness {

/// Aligned multi-channel record set: every channel shares dt and time grid.
struct ChannelSet {
  std::vector<TimeSeries> channels;
};

enum class Method { kFft, kProny, kMpm, kSt, kGws, kHms };

/// Short method names as used in reports and on the command line:
/// fft, prony, mpm, st, gws, hms.
std::string method_name(Method method);
std::optional<Method> method_from_string(const std::string& name);
std::vector<Method> all_methods();

/// Per-method knobs shared by a comparison run. The rank/order thresholds
/// default to 1e-3 here (field records carry noise well above machine rank);
/// the library defaults of 1e-8 suit noiseless studies.
struct MethodConfigs {
  DetrendPolicy detrend = DetrendPolicy::kLinear;
  double offset_f0 = 60.0;  // read when detrend == kOffset
  fourier::FourierConfig fourier;
  prony::PronyConfig prony;
  pencil::PencilConfig pencil;
  gws::WaveletConfig wavelet;
  hht::EmdConfig emd;
  int hms_bins = 512;

  MethodConfigs() {
    prony.svd_threshold = 1e-3;
    pencil.svd_threshold = 1e-3;
  }
};

/// One (channel, method) cell. `f_dom_hz` is empty exactly when `error` is
/// non-empty; `config` is a digest of the method's configuration so a report
/// row is reproducible; `spectrum` feeds optional plot sidecars.
struct TableRow {
  std::string channel;
  std::string method;
  std::optional<double> f_dom_hz;
  std::string config;
  std::string error;
  std::optional<PowerSpectrum> spectrum;
};

struct ComparisonTable {
  std::vector<TableRow> rows;
  Band band;
  std::optional<double> reference_f;
};

/// Parses the column-per-channel CSV format: header `time_s,<label>,...`,
/// '#' comment lines allowed, '.' decimal. Sampling must be uniform within
/// 1e-6 s of the median step. Throws ParseError (with the line), EmptyFile,
/// NonUniformSampling (naming the row), IoError.
ChannelSet load_csv(const std::string& path);

/// Runs each requested method over each channel (detrend, then the method's
/// dominant-mode operation) and assembles rows in lexical (channel, method)
/// order. A failing cell records its error and leaves every other cell
/// intact. Deterministic for identical inputs. Throws NoMethodsSelected.
ComparisonTable run_comparison(const ChannelSet& channels,
                               const std::vector<Method>& methods,
                               const Band& band,
                               const MethodConfigs& configs = {},
                               std::optional<double> reference_f = {});

/// CSV report: `channel,method,f_dom_hz,deviation_hz,config,error`, one row
/// per cell, full-precision numbers. Throws IoError.
void emit_report_csv(const ComparisonTable& table, const std::string& path);

/// JSON mirror of the same fields. Round-trips f_dom exactly.
void emit_report_json(const ComparisonTable& table, const std::string& path);

/// Reads back an emitted JSON report (used for round-trip checks and by
/// downstream tooling).
ComparisonTable parse_report_json(const std::string& path);

/// `freq_hz,power` pairs for plotting. Throws IoError.
void write_spectrum_csv(const PowerSpectrum& spectrum, const std::string& path);

/// Writes a ChannelSet in the load_csv format (the synth CLI's output).
void write_channels_csv(const ChannelSet& channels, const std::string& path);

}  // namespace modalkit::harness

#endif  // MODALKIT_HARNESS_HPP
