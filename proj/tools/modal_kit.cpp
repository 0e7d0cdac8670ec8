// tools/modal_kit.cpp

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

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "modalkit/harness.hpp"
#include "modalkit/synth.hpp"

namespace {

using modalkit::Band;
using modalkit::Error;
using modalkit::Mode;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCellFailures = 2;

Band parse_band(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(modalkit::Errc::BadBand,
                "band must look like '0.05:5', got '" + text + "'");
  }
  Band band;
  band.f_lo = std::stod(text.substr(0, colon));
  band.f_hi = std::stod(text.substr(colon + 1));
  modalkit::validate_band(band);
  return band;
}

std::vector<modalkit::harness::Method> parse_methods(const std::string& text) {
  std::vector<modalkit::harness::Method> methods;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto method = modalkit::harness::method_from_string(token);
    if (!method) {
      throw Error(modalkit::Errc::ParseError,
                  "unknown method '" + token + "' (use fft,prony,mpm,st,gws,hms)");
    }
    methods.push_back(*method);
  }
  if (methods.empty()) {
    throw Error(modalkit::Errc::NoMethodsSelected, "empty method list");
  }
  return methods;
}

modalkit::DetrendPolicy parse_detrend(const std::string& text) {
  if (text == "mean") return modalkit::DetrendPolicy::kMean;
  if (text == "linear") return modalkit::DetrendPolicy::kLinear;
  if (text == "offset") return modalkit::DetrendPolicy::kOffset;
  throw Error(modalkit::Errc::ParseError,
              "detrend must be mean|linear|offset, got '" + text + "'");
}

modalkit::synth::SynthSpec load_synth_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(modalkit::Errc::IoError, "cannot open '" + path + "'");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(modalkit::Errc::ParseError,
                std::string("invalid synth spec: ") + e.what());
  }
  modalkit::synth::SynthSpec spec;
  for (const auto& entry : doc.at("modes")) {
    Mode mode;
    mode.f = entry.at("f").get<double>();
    mode.alpha = entry.value("alpha", 0.0);
    mode.amplitude = entry.value("amplitude", 1.0);
    mode.phase = entry.value("phase", 0.0);
    spec.modes.push_back(mode);
  }
  spec.dt = doc.value("dt", 0.1);
  spec.duration = doc.value("duration", 60.0);
  spec.noise_std = doc.value("noise_std", 0.0);
  spec.seed = doc.value("seed", 0ull);
  spec.label = doc.value("label", std::string("synth"));
  return spec;
}

int run_analyze(const std::string& input, const std::string& methods_text,
                const std::string& band_text, const std::string& out_path,
                bool json_too, const std::string& spectra_dir,
                double reference_hz, bool has_reference,
                const std::string& detrend_text, double offset_hz) {
  namespace hn = modalkit::harness;
  const hn::ChannelSet channels = hn::load_csv(input);
  const std::vector<hn::Method> methods = parse_methods(methods_text);
  const Band band = parse_band(band_text);
  hn::MethodConfigs configs;
  configs.detrend = parse_detrend(detrend_text);
  configs.offset_f0 = offset_hz;
  std::optional<double> reference;
  if (has_reference) reference = reference_hz;

  const hn::ComparisonTable table =
      hn::run_comparison(channels, methods, band, configs, reference);
  hn::emit_report_csv(table, out_path);
  if (json_too) {
    const std::string json_path =
        std::filesystem::path(out_path).replace_extension(".json").string();
    hn::emit_report_json(table, json_path);
  }
  if (!spectra_dir.empty()) {
    std::filesystem::create_directories(spectra_dir);
    for (const hn::TableRow& row : table.rows) {
      if (!row.spectrum) continue;
      const std::string name = row.channel + "_" + row.method + ".csv";
      hn::write_spectrum_csv(*row.spectrum,
                             (std::filesystem::path(spectra_dir) / name).string());
    }
  }

  bool any_failed = false;
  for (const hn::TableRow& row : table.rows) {
    if (!row.error.empty()) {
      any_failed = true;
      std::cerr << row.channel << "/" << row.method << " failed: " << row.error
                << "\n";
    }
  }
  std::cout << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
  return any_failed ? kExitCellFailures : kExitOk;
}

int run_synth(const std::string& spec_path, const std::string& out_path) {
  const modalkit::synth::SynthSpec spec = load_synth_spec(spec_path);
  for (const std::string& warning : modalkit::synth::resolvability_warnings(spec)) {
    std::cerr << "warning: " << warning << "\n";
  }
  modalkit::harness::ChannelSet set;
  set.channels.push_back(modalkit::synth::generate_ringdown(spec));
  modalkit::harness::write_channels_csv(set, out_path);
  std::cout << "wrote " << out_path << " (" << set.channels.front().size()
            << " samples at dt=" << spec.dt << " s)\n";
  return kExitOk;
}

int run_window(const std::string& input, const std::string& channel,
               double window_s, double step_s, const std::string& band_text,
               const std::string& out_path, const std::string& detrend_text,
               double offset_hz) {
  namespace hn = modalkit::harness;
  const hn::ChannelSet channels = hn::load_csv(input);
  const modalkit::TimeSeries* selected = nullptr;
  for (const modalkit::TimeSeries& ch : channels.channels) {
    if (ch.label == channel) selected = &ch;
  }
  if (selected == nullptr) {
    throw Error(modalkit::Errc::ParseError,
                "channel '" + channel + "' not in '" + input + "'");
  }
  const Band band = parse_band(band_text);
  const modalkit::TimeSeries clean =
      modalkit::detrend(*selected, parse_detrend(detrend_text), offset_hz);

  modalkit::pencil::PencilConfig cfg;
  cfg.svd_threshold = 1e-3;  // field records carry noise
  cfg.window_len_s = window_s;
  cfg.step_s = step_s;
  const auto reports = modalkit::pencil::sliding_dominant(clean, cfg, band);

  std::ofstream out(out_path);
  if (!out) {
    throw Error(modalkit::Errc::IoError, "cannot open '" + out_path + "'");
  }
  out << "window_start_s,window_len_s,f_dom_hz,alpha,amplitude,energy\n";
  char buf[256];
  for (const auto& report : reports) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  report.window_start_s, report.window_len_s,
                  report.dominant.f, report.dominant.alpha,
                  report.dominant.amplitude, report.dominant.energy);
    out << buf;
  }
  std::cout << "wrote " << out_path << " (" << reports.size() << " windows)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modal-kit: dominant low-frequency oscillation mode analysis"};
  app.require_subcommand(1);

  std::string input, out_path, methods_text = "fft,prony,mpm,st,gws,hms";
  std::string band_text = "0.05:5";
  std::string spectra_dir;
  std::string detrend_text = "linear";
  double reference_hz = 0.2;
  double offset_hz = 60.0;
  bool json_too = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "cross-method dominant-mode comparison over a CSV record set");
  analyze->add_option("--input", input, "input CSV (time_s,<label>,...)")
      ->required();
  analyze->add_option("--methods", methods_text,
                      "comma list of fft,prony,mpm,st,gws,hms");
  analyze->add_option("--band", band_text, "analysis band lo:hi in Hz");
  analyze->add_option("--out", out_path, "report CSV path")->required();
  analyze->add_flag("--json", json_too, "also write the report as JSON");
  analyze->add_option("--spectra-dir", spectra_dir,
                      "write per-cell spectra as freq,power CSVs here");
  CLI::Option* ref_opt = analyze->add_option(
      "--reference-hz", reference_hz, "reference frequency for the deviation column");
  analyze->add_option("--detrend", detrend_text, "mean|linear|offset");
  analyze->add_option("--offset-hz", offset_hz,
                      "constant removed when --detrend offset");

  std::string spec_path;
  CLI::App* synth = app.add_subcommand(
      "synth", "generate a damped-sinusoid ringdown CSV from a JSON spec");
  synth->add_option("--spec", spec_path, "SynthSpec JSON path")->required();
  synth->add_option("--out", out_path, "output CSV path")->required();

  std::string channel;
  double window_s = 20.0, step_s = 5.0;
  CLI::App* window = app.add_subcommand(
      "window", "sliding-window dominant-mode track (matrix pencil)");
  window->add_option("--input", input, "input CSV")->required();
  window->add_option("--channel", channel, "channel label")->required();
  window->add_option("--window", window_s, "window length in seconds");
  window->add_option("--step", step_s, "window stride in seconds");
  window->add_option("--band", band_text, "analysis band lo:hi in Hz");
  window->add_option("--out", out_path, "output CSV path")->required();
  window->add_option("--detrend", detrend_text, "mean|linear|offset");
  window->add_option("--offset-hz", offset_hz,
                     "constant removed when --detrend offset");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      return run_analyze(input, methods_text, band_text, out_path, json_too,
                         spectra_dir, reference_hz, ref_opt->count() > 0,
                         detrend_text, offset_hz);
    }
    if (app.got_subcommand(synth)) {
      return run_synth(spec_path, out_path);
    }
    if (app.got_subcommand(window)) {
      return run_window(input, channel, window_s, step_s, band_text, out_path,
                        detrend_text, offset_hz);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
