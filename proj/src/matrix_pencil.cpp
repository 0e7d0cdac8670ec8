// src/matrix_pencil.cpp

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

#include "modalkit/matrix_pencil.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "modalkit/core.hpp"
#include "modalkit/peaks.hpp"
#include "modalkit/prony.hpp"

namespace modalkit::pencil {

namespace {

int default_pencil(std::size_t n) {
  return std::max(static_cast<int>(n / 3), 1);
}

}  // namespace

std::vector<poles::ExponentialTerm> pencil_fit_terms(const TimeSeries& series,
                                                     const PencilConfig& cfg) {
  const auto n = static_cast<Eigen::Index>(series.size());
  const int l = cfg.pencil_L > 0 ? cfg.pencil_L : default_pencil(series.size());
  if (l < 1 || l > n - 2) {
    throw Error(Errc::BadPencilParameter,
                "pencil parameter L=" + std::to_string(l) +
                    " outside [1, N-2] for N=" + std::to_string(n));
  }

  // Hankel data matrix, (N-L) x (L+1): row i holds x[i..i+L].
  Eigen::MatrixXd hankel(n - l, l + 1);
  for (Eigen::Index i = 0; i < n - l; ++i) {
    for (Eigen::Index j = 0; j <= l; ++j) {
      hankel(i, j) = series.samples[static_cast<std::size_t>(i + j)];
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(hankel, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();

  const int rank_cap = static_cast<int>(std::min<Eigen::Index>(l, n - l));
  int rank = 0;
  if (cfg.rank_policy == PencilConfig::RankPolicy::kSvdAuto) {
    const double cutoff = cfg.svd_threshold * sv(0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff && sv(i) > 0.0) ++rank;
    }
    rank = std::min(rank, rank_cap);
    if (rank == 0) {
      throw Error(Errc::RankZero, "signal indistinguishable from zero at "
                                  "relative threshold " +
                                      std::to_string(cfg.svd_threshold));
    }
  } else {
    rank = cfg.fixed_rank;
    if (rank < 1 || rank > rank_cap) {
      throw Error(Errc::BadPencilParameter,
                  "fixed rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(rank_cap) + "]");
    }
    if (!(sv(std::min<Eigen::Index>(rank, sv.size()) - 1) > 0.0)) {
      throw Error(Errc::RankZero, "signal rank below the requested fixed rank");
    }
  }

  // Shifted pencil on the dominant right singular vectors: drop the last /
  // first row of V_trunc; the poles are the eigenvalues of pinv(V1) * V2.
  const Eigen::MatrixXd v = svd.matrixV().leftCols(rank);
  const Eigen::MatrixXd v1 = v.topRows(l);
  const Eigen::MatrixXd v2 = v.bottomRows(l);
  const Eigen::MatrixXd pencil_matrix =
      v1.colPivHouseholderQr().solve(v2);

  Eigen::EigenSolver<Eigen::MatrixXd> eig(pencil_matrix,
                                          /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> z(static_cast<std::size_t>(rank));
  for (Eigen::Index i = 0; i < rank; ++i) {
    z[static_cast<std::size_t>(i)] = eig.eigenvalues()(i);
  }
  return poles::solve_residues(z, series.samples);
}

std::vector<Mode> pencil_fit(const TimeSeries& series,
                             const PencilConfig& cfg) {
  const std::vector<poles::ExponentialTerm> terms =
      pencil_fit_terms(series, cfg);
  double peak = 0.0;
  for (double v : series.samples) peak = std::max(peak, std::abs(v));
  return poles::collapse_to_modes(terms, series.dt, series.duration(),
                                  cfg.amplitude_floor_rel * peak);
}

double mode_energy(const Mode& mode, double duration) {
  if (!(duration > 0.0)) {
    throw Error(Errc::BadConfig, "duration must be positive");
  }
  return mode.amplitude * mode.amplitude *
         poles::envelope_energy_integral(mode.alpha, duration);
}

std::vector<DominantModeReport> sliding_dominant(const TimeSeries& series,
                                                 const PencilConfig& cfg,
                                                 const Band& band) {
  validate_band(band);
  const auto n = static_cast<long long>(series.size());
  const long long win = std::llround(cfg.window_len_s / series.dt);
  const long long step = std::max<long long>(std::llround(cfg.step_s / series.dt), 1);
  if (win > n) {
    throw Error(Errc::WindowTooLong,
                "window " + std::to_string(cfg.window_len_s) + " s exceeds " +
                    std::to_string(series.duration()) + " s record");
  }
  if (win < 4) {
    throw Error(Errc::BadConfig, "window must cover at least 4 samples");
  }

  std::vector<DominantModeReport> reports;
  for (long long start = 0; start + win <= n; start += step) {
    const double start_s = static_cast<double>(start) * series.dt;
    const double len_s = static_cast<double>(win) * series.dt;
    TimeSeries window = slice_window(series, start_s, len_s);
    std::vector<Mode> modes;
    try {
      modes = pencil_fit(window, cfg);
    } catch (const Error& e) {
      if (e.code() == Errc::RankZero) continue;  // quiet window, no report
      throw;
    }
    const auto best = poles::argmax_energy_in_band(modes, band);
    if (!best) continue;
    DominantModeReport report;
    report.window_start_s = start_s;
    report.window_len_s = len_s;
    report.dominant = modes[*best];  // the exact all_modes element
    report.all_modes = std::move(modes);
    reports.push_back(std::move(report));
  }
  return reports;
}

std::pair<TimeSeries, double> reconstruct_mpm(const TimeSeries& series,
                                              const PencilConfig& cfg) {
  const std::vector<Mode> modes = pencil_fit(series, cfg);
  TimeSeries fit = reconstruct(modes, series.size(), series.dt);
  fit.t0 = series.t0;
  fit.label = series.label;
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double d = series.samples[i] - fit.samples[i];
    err += d * d;
    ref += series.samples[i] * series.samples[i];
  }
  const double rel = ref > 0.0 ? std::sqrt(err / ref) : 0.0;
  return {std::move(fit), rel};
}

std::pair<Mode, PowerSpectrum> dominant_mode_mpm(const TimeSeries& series,
                                                 const PencilConfig& cfg,
                                                 const Band& band) {
  validate_band(band);
  const std::vector<Mode> modes = pencil_fit(series, cfg);
  const PowerSpectrum spectrum =
      prony::prony_energy_spectrum(modes, series.duration());
  const auto best = poles::argmax_energy_in_band(modes, band);
  if (!best) {
    throw Error(Errc::NoModeInBand, "no fitted mode inside [" +
                                        std::to_string(band.f_lo) + ", " +
                                        std::to_string(band.f_hi) + "] Hz");
  }
  Mode dominant = modes[*best];
  dominant.f = peaks::snap_hz(dominant.f);
  return {dominant, spectrum};
}

}  // namespace modalkit::pencil
