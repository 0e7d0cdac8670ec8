// src/harness.cpp

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

#include "modalkit/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "modalkit/stransform.hpp"

namespace modalkit::harness {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(line);
  while (std::getline(ss, token, ',')) out.push_back(trim(token));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_number(const std::string& token, std::size_t line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) +
                                      ": cannot parse number '" + token + "'");
  }
  return value;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string config_digest(Method method, const Band& band,
                          const MethodConfigs& cfg) {
  std::string canon = method_name(method) + ";band=" + fmt_double(band.f_lo) +
                      ":" + fmt_double(band.f_hi) +
                      ";detrend=" + std::to_string(static_cast<int>(cfg.detrend));
  if (cfg.detrend == DetrendPolicy::kOffset) {
    canon += ";f0=" + fmt_double(cfg.offset_f0);
  }
  switch (method) {
    case Method::kFft:
      canon += ";gwf=" + fmt_double(cfg.fourier.gaussian_window_factor) +
               ";zpf=" + std::to_string(cfg.fourier.zero_pad_factor);
      break;
    case Method::kProny:
      canon += ";p=" + std::to_string(cfg.prony.order_p) + ";policy=" +
               std::to_string(static_cast<int>(cfg.prony.order_policy)) +
               ";th=" + fmt_double(cfg.prony.svd_threshold);
      break;
    case Method::kMpm:
      canon += ";L=" + std::to_string(cfg.pencil.pencil_L) + ";policy=" +
               std::to_string(static_cast<int>(cfg.pencil.rank_policy)) +
               ";rank=" + std::to_string(cfg.pencil.fixed_rank) +
               ";th=" + fmt_double(cfg.pencil.svd_threshold);
      break;
    case Method::kSt:
      break;
    case Method::kGws:
      canon += ";omega0=" + fmt_double(cfg.wavelet.omega0) +
               ";dj=" + fmt_double(cfg.wavelet.dj) +
               ";coi=" + std::to_string(cfg.wavelet.coi_exclusion ? 1 : 0);
      break;
    case Method::kHms:
      canon += ";sd=" + fmt_double(cfg.emd.sd_threshold) +
               ";max_sift=" + std::to_string(cfg.emd.max_sift) +
               ";bins=" + std::to_string(cfg.hms_bins);
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

// One method cell: detrend, run the method's dominant-mode operation, clamp
// the refined frequency into the band (refinement may stray half a bin past
// an edge peak).
std::pair<double, PowerSpectrum> run_cell(const TimeSeries& channel,
                                          Method method, const Band& band,
                                          const MethodConfigs& cfg) {
  // The search range is the requested band intersected with what the record
  // can represent; a band lying entirely at or above Nyquist has nothing to
  // search.
  if (!(band.f_lo < channel.nyquist())) {
    throw Error(Errc::BadBand,
                "band starts at " + std::to_string(band.f_lo) +
                    " Hz, at or above Nyquist " +
                    std::to_string(channel.nyquist()) + " Hz");
  }
  const TimeSeries clean = detrend(channel, cfg.detrend, cfg.offset_f0);
  std::pair<double, PowerSpectrum> result;
  switch (method) {
    case Method::kFft:
      result = fourier::dominant_mode_fft(clean, cfg.fourier, band);
      break;
    case Method::kProny: {
      auto [mode, spectrum] = prony::dominant_mode_prony(clean, cfg.prony, band);
      result = {mode.f, std::move(spectrum)};
      break;
    }
    case Method::kMpm: {
      auto [mode, spectrum] = pencil::dominant_mode_mpm(clean, cfg.pencil, band);
      result = {mode.f, std::move(spectrum)};
      break;
    }
    case Method::kSt: {
      const TimeFrequencyMap map = st::stransform(clean);
      result = st::dominant_mode_st(map, band);
      break;
    }
    case Method::kGws:
      result = gws::dominant_mode_gws(clean, cfg.wavelet, band);
      break;
    case Method::kHms: {
      auto [f, marginal] =
          hht::dominant_mode_hms(clean, cfg.emd, band, cfg.hms_bins);
      result = {f, std::move(marginal.spectrum)};
      break;
    }
  }
  result.first = std::clamp(result.first, band.f_lo, band.f_hi);
  return result;
}

}  // namespace

std::string method_name(Method method) {
  switch (method) {
    case Method::kFft: return "fft";
    case Method::kProny: return "prony";
    case Method::kMpm: return "mpm";
    case Method::kSt: return "st";
    case Method::kGws: return "gws";
    case Method::kHms: return "hms";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& name) {
  for (Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<Method> all_methods() {
  return {Method::kFft, Method::kProny, Method::kMpm,
          Method::kSt,  Method::kGws,   Method::kHms};
}

ChannelSet load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for reading");
  }

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> labels;
  std::vector<double> times;
  std::vector<std::vector<double>> columns;
  bool have_header = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::vector<std::string> tokens = split_csv_line(stripped);
    if (!have_header) {
      if (tokens.size() < 2 || tokens[0] != "time_s") {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) +
                        ": header must be 'time_s,<label>,...'");
      }
      labels.assign(tokens.begin() + 1, tokens.end());
      std::set<std::string> seen;
      for (const std::string& label : labels) {
        if (label.empty() || !seen.insert(label).second) {
          throw Error(Errc::ParseError,
                      "line " + std::to_string(line_no) +
                          ": empty or duplicate channel label '" + label + "'");
        }
      }
      columns.resize(labels.size());
      have_header = true;
      continue;
    }
    if (tokens.size() != labels.size() + 1) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": expected " +
                      std::to_string(labels.size() + 1) + " columns, got " +
                      std::to_string(tokens.size()));
    }
    times.push_back(parse_number(tokens[0], line_no));
    for (std::size_t c = 0; c < labels.size(); ++c) {
      columns[c].push_back(parse_number(tokens[c + 1], line_no));
    }
  }
  if (!have_header || times.empty()) {
    throw Error(Errc::EmptyFile, "'" + path + "' holds no data rows");
  }
  if (times.size() < 4) {
    throw Error(Errc::TooShort, "'" + path + "' holds fewer than 4 data rows");
  }

  std::vector<double> diffs(times.size() - 1);
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    diffs[i] = times[i + 1] - times[i];
  }
  std::vector<double> sorted = diffs;
  std::sort(sorted.begin(), sorted.end());
  const double dt = sorted[sorted.size() / 2];
  if (!(dt > 0.0)) {
    throw Error(Errc::BadDt, "'" + path + "' time column is not increasing");
  }
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (std::abs(diffs[i] - dt) > 1e-6) {
      throw Error(Errc::NonUniformSampling,
                  "row " + std::to_string(i + 2) + " (t=" +
                      fmt_double(times[i + 1]) + "): step " +
                      fmt_double(diffs[i]) + " s deviates from median " +
                      fmt_double(dt) + " s");
    }
  }

  ChannelSet set;
  for (std::size_t c = 0; c < labels.size(); ++c) {
    set.channels.push_back(
        validate_series(std::move(columns[c]), dt, times[0], labels[c]));
  }
  return set;
}

ComparisonTable run_comparison(const ChannelSet& channels,
                               const std::vector<Method>& methods,
                               const Band& band, const MethodConfigs& configs,
                               std::optional<double> reference_f) {
  if (methods.empty()) {
    throw Error(Errc::NoMethodsSelected, "select at least one method");
  }
  validate_band(band);
  if (channels.channels.empty()) {
    throw Error(Errc::EmptyFile, "channel set is empty");
  }

  std::vector<Method> unique = methods;
  std::sort(unique.begin(), unique.end(), [](Method a, Method b) {
    return method_name(a) < method_name(b);
  });
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  ComparisonTable table;
  table.band = band;
  table.reference_f = reference_f;
  for (const TimeSeries& channel : channels.channels) {
    for (Method method : unique) {
      TableRow row;
      row.channel = channel.label;
      row.method = method_name(method);
      row.config = config_digest(method, band, configs);
      try {
        auto [f_dom, spectrum] = run_cell(channel, method, band, configs);
        row.f_dom_hz = f_dom;
        row.spectrum = std::move(spectrum);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      table.rows.push_back(std::move(row));
    }
  }
  std::sort(table.rows.begin(), table.rows.end(),
            [](const TableRow& a, const TableRow& b) {
              if (a.channel != b.channel) return a.channel < b.channel;
              return a.method < b.method;
            });
  return table;
}

void emit_report_csv(const ComparisonTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << "channel,method,f_dom_hz,deviation_hz,config,error\n";
  for (const TableRow& row : table.rows) {
    out << row.channel << ',' << row.method << ',';
    if (row.f_dom_hz) out << fmt_double(*row.f_dom_hz);
    out << ',';
    if (row.f_dom_hz && table.reference_f) {
      out << fmt_double(*row.f_dom_hz - *table.reference_f);
    }
    out << ',' << row.config << ',' << row.error << '\n';
  }
  if (!out) {
    throw Error(Errc::IoError, "write to '" + path + "' failed");
  }
}

void emit_report_json(const ComparisonTable& table, const std::string& path) {
  nlohmann::ordered_json doc;
  doc["band"] = {{"f_lo", table.band.f_lo}, {"f_hi", table.band.f_hi}};
  if (table.reference_f) {
    doc["reference_hz"] = *table.reference_f;
  } else {
    doc["reference_hz"] = nullptr;
  }
  doc["rows"] = nlohmann::ordered_json::array();
  for (const TableRow& row : table.rows) {
    nlohmann::ordered_json cell;
    cell["channel"] = row.channel;
    cell["method"] = row.method;
    if (row.f_dom_hz) {
      cell["f_dom_hz"] = *row.f_dom_hz;
      if (table.reference_f) {
        cell["deviation_hz"] = *row.f_dom_hz - *table.reference_f;
      } else {
        cell["deviation_hz"] = nullptr;
      }
    } else {
      cell["f_dom_hz"] = nullptr;
      cell["deviation_hz"] = nullptr;
    }
    cell["config"] = row.config;
    cell["error"] = row.error;
    doc["rows"].push_back(std::move(cell));
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw Error(Errc::IoError, "write to '" + path + "' failed");
  }
}

ComparisonTable parse_report_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for reading");
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid report JSON: ") + e.what());
  }
  ComparisonTable table;
  table.band.f_lo = doc.at("band").at("f_lo").get<double>();
  table.band.f_hi = doc.at("band").at("f_hi").get<double>();
  if (!doc.at("reference_hz").is_null()) {
    table.reference_f = doc.at("reference_hz").get<double>();
  }
  for (const auto& cell : doc.at("rows")) {
    TableRow row;
    row.channel = cell.at("channel").get<std::string>();
    row.method = cell.at("method").get<std::string>();
    if (!cell.at("f_dom_hz").is_null()) {
      row.f_dom_hz = cell.at("f_dom_hz").get<double>();
    }
    row.config = cell.at("config").get<std::string>();
    row.error = cell.at("error").get<std::string>();
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_spectrum_csv(const PowerSpectrum& spectrum,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << "freq_hz,power\n";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    out << fmt_double(spectrum.freqs[i]) << ',' << fmt_double(spectrum.power[i])
        << '\n';
  }
  if (!out) {
    throw Error(Errc::IoError, "write to '" + path + "' failed");
  }
}

void write_channels_csv(const ChannelSet& channels, const std::string& path) {
  if (channels.channels.empty()) {
    throw Error(Errc::EmptyFile, "channel set is empty");
  }
  const std::size_t n = channels.channels.front().size();
  for (const TimeSeries& ch : channels.channels) {
    if (ch.size() != n || ch.dt != channels.channels.front().dt) {
      throw Error(Errc::NonUniformSampling,
                  "channels disagree on length or dt");
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  }
  out << "time_s";
  for (const TimeSeries& ch : channels.channels) out << ',' << ch.label;
  out << '\n';
  const TimeSeries& first = channels.channels.front();
  for (std::size_t i = 0; i < n; ++i) {
    out << fmt_double(first.time_at(i));
    for (const TimeSeries& ch : channels.channels) {
      out << ',' << fmt_double(ch.samples[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw Error(Errc::IoError, "write to '" + path + "' failed");
  }
}

}  // namespace modalkit::harness
