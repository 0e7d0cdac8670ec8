// src/hht.cpp

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

#include "modalkit/hht.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "modalkit/fft.hpp"
#include "modalkit/peaks.hpp"

namespace modalkit::hht {

namespace {

// Natural cubic spline through strictly increasing knots, evaluated on the
// integer grid 0..n-1. Two knots degrade to a line, one to a constant.
std::vector<double> spline_envelope(const std::vector<double>& knot_t,
                                    const std::vector<double>& knot_y,
                                    std::size_t n) {
  const std::size_t k = knot_t.size();
  std::vector<double> out(n, 0.0);
  if (k == 0) return out;
  if (k == 1) {
    std::fill(out.begin(), out.end(), knot_y[0]);
    return out;
  }
  std::vector<double> m(k, 0.0);  // second derivatives, natural ends
  if (k > 2) {
    // Thomas solve of the tridiagonal moment system.
    std::vector<double> diag(k, 0.0), rhs(k, 0.0), upper(k, 0.0);
    for (std::size_t i = 1; i + 1 < k; ++i) {
      const double h0 = knot_t[i] - knot_t[i - 1];
      const double h1 = knot_t[i + 1] - knot_t[i];
      diag[i] = 2.0 * (h0 + h1);
      upper[i] = h1;
      rhs[i] = 6.0 * ((knot_y[i + 1] - knot_y[i]) / h1 -
                      (knot_y[i] - knot_y[i - 1]) / h0);
    }
    for (std::size_t i = 2; i + 1 < k; ++i) {
      const double h0 = knot_t[i] - knot_t[i - 1];  // lower coefficient
      const double w = h0 / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = k - 2; i >= 1; --i) {
      m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
      if (i == 1) break;
    }
  }

  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i);
    while (seg + 2 < k && t > knot_t[seg + 1]) ++seg;
    const double h = knot_t[seg + 1] - knot_t[seg];
    const double a = (knot_t[seg + 1] - t) / h;
    const double b = (t - knot_t[seg]) / h;
    out[i] = a * knot_y[seg] + b * knot_y[seg + 1] +
             ((a * a * a - a) * m[seg] + (b * b * b - b) * m[seg + 1]) *
                 (h * h) / 6.0;
  }
  return out;
}

// Extrema knots extended by reflecting up to two of them about each record
// endpoint, keeping abscissae strictly increasing.
void mirrored_knots(const std::vector<int>& extrema,
                    const std::vector<double>& x, std::size_t n,
                    std::vector<double>& knot_t, std::vector<double>& knot_y) {
  knot_t.clear();
  knot_y.clear();
  const std::size_t k = extrema.size();
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = std::min<std::size_t>(k, 2); i-- > 0;) {
    const double t = -static_cast<double>(extrema[i]);
    if (t < static_cast<double>(extrema[0])) {
      knot_t.push_back(t);
      knot_y.push_back(x[static_cast<std::size_t>(extrema[i])]);
    }
  }
  for (int idx : extrema) {
    knot_t.push_back(static_cast<double>(idx));
    knot_y.push_back(x[static_cast<std::size_t>(idx)]);
  }
  for (std::size_t cnt = 0; cnt < std::min<std::size_t>(k, 2); ++cnt) {
    const std::size_t i = k - 1 - cnt;  // nearest reflection first
    const double t = 2.0 * last - static_cast<double>(extrema[i]);
    if (t > knot_t.back()) {
      knot_t.push_back(t);
      knot_y.push_back(x[static_cast<std::size_t>(extrema[i])]);
    }
  }
}

struct SiftOutcome {
  std::vector<double> imf;
  int iterations = 0;
  bool flagged = false;
};

SiftOutcome sift_component(std::vector<double> h, const EmdConfig& cfg) {
  const std::size_t n = h.size();
  SiftOutcome outcome;
  std::vector<int> maxima, minima;
  std::vector<double> knot_t, knot_y;
  for (int iter = 1; iter <= cfg.max_sift; ++iter) {
    find_extrema(h, maxima, minima);
    if (maxima.size() < 2 || minima.size() < 2) {
      // Too few wiggles left to build envelopes; take the candidate as is.
      outcome.iterations = iter - 1;
      break;
    }
    mirrored_knots(maxima, h, n, knot_t, knot_y);
    const std::vector<double> upper = spline_envelope(knot_t, knot_y, n);
    mirrored_knots(minima, h, n, knot_t, knot_y);
    const std::vector<double> lower = spline_envelope(knot_t, knot_y, n);

    double sd_num = 0.0, sd_den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double mean = 0.5 * (upper[i] + lower[i]);
      sd_num += mean * mean;
      sd_den += h[i] * h[i];
      h[i] -= mean;
    }
    const double sd = sd_den > 0.0 ? sd_num / sd_den : 0.0;
    outcome.iterations = iter;
    if (sd < cfg.sd_threshold && is_well_formed(h)) {
      outcome.imf = std::move(h);
      return outcome;
    }
  }
  outcome.flagged = !is_well_formed(h);
  outcome.imf = std::move(h);
  return outcome;
}

}  // namespace

void find_extrema(const std::vector<double>& x, std::vector<int>& maxima,
                  std::vector<int>& minima) {
  maxima.clear();
  minima.clear();
  const std::size_t n = x.size();
  int last_sign = 0;
  std::size_t run_start = 0;  // sample where the current flat/turn began
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i + 1] - x[i];
    const int s = d > 0.0 ? 1 : (d < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last_sign > 0 && s < 0) {
      maxima.push_back(static_cast<int>((run_start + 1 + i) / 2));
    } else if (last_sign < 0 && s > 0) {
      minima.push_back(static_cast<int>((run_start + 1 + i) / 2));
    }
    last_sign = s;
    run_start = i;
  }
}

int zero_crossings(const std::vector<double>& x) {
  int count = 0;
  int last_sign = 0;
  for (double v : x) {
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++count;
    last_sign = s;
  }
  return count;
}

bool is_well_formed(const std::vector<double>& x) {
  std::vector<int> maxima, minima;
  find_extrema(x, maxima, minima);
  const int extrema = static_cast<int>(maxima.size() + minima.size());
  return std::abs(extrema - zero_crossings(x)) <= 1;
}

ImfSet emd(const TimeSeries& series, const EmdConfig& cfg) {
  if (!(cfg.sd_threshold > 0.0) || cfg.max_sift < 1 || cfg.max_imfs < 1) {
    throw Error(Errc::BadConfig, "sd_threshold, max_sift and max_imfs must be positive");
  }
  std::vector<int> maxima, minima;
  find_extrema(series.samples, maxima, minima);
  if (maxima.size() < 2 || minima.size() < 2) {
    throw Error(Errc::TooFewExtrema,
                "need at least 2 maxima and 2 minima, found " +
                    std::to_string(maxima.size()) + " / " +
                    std::to_string(minima.size()));
  }

  ImfSet out;
  std::vector<double> residue = series.samples;
  while (static_cast<int>(out.imfs.size()) < cfg.max_imfs) {
    find_extrema(residue, maxima, minima);
    if (maxima.size() < 2 || minima.size() < 2) break;
    SiftOutcome sifted = sift_component(residue, cfg);
    if (sifted.imf.empty()) break;
    for (std::size_t i = 0; i < residue.size(); ++i) {
      residue[i] -= sifted.imf[i];
    }
    TimeSeries imf;
    imf.samples = std::move(sifted.imf);
    imf.dt = series.dt;
    imf.t0 = series.t0;
    imf.label = series.label;
    out.imfs.push_back(std::move(imf));
    out.sift_counts.push_back(sifted.iterations);
    out.flagged.push_back(sifted.flagged);
  }
  out.residue.samples = std::move(residue);
  out.residue.dt = series.dt;
  out.residue.t0 = series.t0;
  out.residue.label = series.label;
  return out;
}

AnalyticImf hilbert_analytic(const TimeSeries& imf) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const std::size_t n = imf.size();
  AnalyticImf out;
  out.dt = imf.dt;
  out.amplitude.assign(n, 0.0);
  out.phase.assign(n, 0.0);
  out.inst_freq.assign(n, 0.0);

  double peak = 0.0;
  for (double v : imf.samples) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return out;  // zero component: all-zero description

  const std::vector<std::complex<double>> z =
      fft::analytic_signal(imf.samples);
  // Amplitude and phase from the original sample and the quadrature part,
  // so a^2 = c^2 + H[c]^2 holds as stated.
  double prev_raw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = imf.samples[i];
    const double q = z[i].imag();
    out.amplitude[i] = std::hypot(c, q);
    const double raw = std::atan2(q, c);
    if (i == 0) {
      out.phase[0] = raw;
    } else {
      out.phase[i] = out.phase[i - 1] + std::remainder(raw - prev_raw, two_pi);
    }
    prev_raw = raw;
  }
  if (n >= 2) {
    const double inv = 1.0 / (two_pi * imf.dt);
    out.inst_freq[0] = (out.phase[1] - out.phase[0]) * inv;
    out.inst_freq[n - 1] = (out.phase[n - 1] - out.phase[n - 2]) * inv;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      out.inst_freq[i] = (out.phase[i + 1] - out.phase[i - 1]) * (0.5 * inv);
    }
  }
  return out;
}

MarginalSpectrum hilbert_marginal_spectrum(const ImfSet& imf_set,
                                           const Band& band, int n_bins,
                                           bool energy_weighted) {
  validate_band(band);
  if (n_bins < 1) {
    throw Error(Errc::BadConfig, "n_bins must be >= 1");
  }
  MarginalSpectrum out;
  out.bin_width = (band.f_hi - band.f_lo) / static_cast<double>(n_bins);
  out.spectrum.freqs.resize(static_cast<std::size_t>(n_bins));
  out.spectrum.power.assign(static_cast<std::size_t>(n_bins), 0.0);
  for (int k = 0; k < n_bins; ++k) {
    out.spectrum.freqs[static_cast<std::size_t>(k)] =
        band.f_lo + (static_cast<double>(k) + 0.5) * out.bin_width;
  }

  for (const TimeSeries& imf : imf_set.imfs) {
    const AnalyticImf analytic = hilbert_analytic(imf);
    const std::size_t n = imf.size();
    const std::size_t margin = n / 20;  // 5% per edge
    double amp_peak = 0.0;
    for (double a : analytic.amplitude) amp_peak = std::max(amp_peak, a);
    const double amp_floor = 1e-6 * amp_peak;
    for (std::size_t i = margin; i + margin < n; ++i) {
      const double a = analytic.amplitude[i];
      if (!(a >= amp_floor) || a == 0.0) continue;
      const double f = analytic.inst_freq[i];
      if (f < 0.0) {
        ++out.skipped_negative_freq;
        continue;
      }
      if (f < band.f_lo || f > band.f_hi) continue;
      auto bin = static_cast<std::size_t>((f - band.f_lo) / out.bin_width);
      bin = std::min(bin, static_cast<std::size_t>(n_bins - 1));
      const double mass = (energy_weighted ? a * a : a) * imf.dt;
      out.spectrum.power[bin] += mass;
      out.total_mass += mass;
    }
  }
  return out;
}

std::pair<double, MarginalSpectrum> dominant_mode_hms(const TimeSeries& series,
                                                      const EmdConfig& cfg,
                                                      const Band& band,
                                                      int n_bins) {
  const ImfSet imfs = emd(series, cfg);
  MarginalSpectrum marginal = hilbert_marginal_spectrum(imfs, band, n_bins);
  const PowerSpectrum& spectrum = marginal.spectrum;
  std::size_t peak = 0;
  for (std::size_t i = 1; i < spectrum.size(); ++i) {
    if (spectrum.power[i] > spectrum.power[peak]) peak = i;
  }
  double f_dom = spectrum.freqs[peak];
  if (peak > 0 && peak + 1 < spectrum.size()) {
    const double delta = peaks::parabolic_offset(spectrum.power[peak - 1],
                                                 spectrum.power[peak],
                                                 spectrum.power[peak + 1]);
    f_dom += delta * marginal.bin_width;
  }
  return {peaks::snap_hz(f_dom), std::move(marginal)};
}

}  // namespace modalkit::hht
