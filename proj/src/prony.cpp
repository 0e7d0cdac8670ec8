// src/prony.cpp

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

#include "modalkit/prony.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "modalkit/peaks.hpp"

namespace modalkit::prony {

namespace {

// Forward linear-prediction matrix at order p:
// row i predicts x[p+i] from the p preceding samples.
Eigen::MatrixXd prediction_matrix(std::span<const double> x, int p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n - p, p);
  for (Eigen::Index i = 0; i < n - p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      a(i, j) = x[static_cast<std::size_t>(p - 1 + i - j)];
    }
  }
  return a;
}

Eigen::VectorXd prediction_rhs(std::span<const double> x, int p) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::VectorXd b(n - p);
  for (Eigen::Index i = 0; i < n - p; ++i) {
    b(i) = x[static_cast<std::size_t>(p + i)];
  }
  return b;
}

// Roots of z^p - c_1 z^{p-1} - ... - c_p via the companion matrix.
std::vector<std::complex<double>> characteristic_roots(
    const Eigen::VectorXd& coeffs) {
  const Eigen::Index p = coeffs.size();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
  companion.row(0) = coeffs.transpose();
  for (Eigen::Index i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion,
                                             /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) {
    roots[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  return roots;
}

int default_order(std::size_t n) {
  int p = static_cast<int>(std::min<std::size_t>(n / 3, 60));
  if (p % 2 != 0) --p;
  return std::max(p, 2);
}

}  // namespace

std::vector<poles::ExponentialTerm> prony_fit_terms(const TimeSeries& series,
                                                    const PronyConfig& cfg) {
  const std::size_t n = series.size();
  const std::span<const double> x(series.samples);

  int p = 0;
  if (cfg.order_policy == PronyConfig::OrderPolicy::kFixed) {
    if (cfg.order_p < 2 || cfg.order_p % 2 != 0) {
      throw Error(Errc::BadConfig, "fixed order must be an even integer >= 2");
    }
    p = cfg.order_p;
  } else {
    p = cfg.order_p > 0 ? cfg.order_p : default_order(n);
  }
  if (static_cast<std::size_t>(2 * p) >= n) {
    throw Error(Errc::OrderTooHigh, "order " + std::to_string(p) +
                                        " needs more than " +
                                        std::to_string(2 * p) + " samples");
  }

  Eigen::MatrixXd a = prediction_matrix(x, p);
  Eigen::VectorXd b = prediction_rhs(x, p);

  if (cfg.order_policy == PronyConfig::OrderPolicy::kSvdAuto) {
    Eigen::BDCSVD<Eigen::MatrixXd> probe(a);
    const auto& sv = probe.singularValues();
    const double cutoff = cfg.svd_threshold * sv(0);
    int effective = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) > cutoff && sv(i) > 0.0) ++effective;
    }
    if (effective == 0) return {};  // indistinguishable from zero
    if (effective < p) {
      p = effective;
      a = prediction_matrix(x, p);
      b = prediction_rhs(x, p);
    }
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> probe(a);
    const auto& sv = probe.singularValues();
    const double machine_cutoff = sv(0) * std::max(a.rows(), a.cols()) *
                                  std::numeric_limits<double>::epsilon();
    if (!(sv(sv.size() - 1) > machine_cutoff)) {
      throw Error(Errc::IllConditioned,
                  "prediction matrix is rank-deficient at fixed order " +
                      std::to_string(p));
    }
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd coeffs = svd.solve(b);

  const std::vector<std::complex<double>> roots = characteristic_roots(coeffs);
  return poles::solve_residues(roots, x);
}

std::vector<Mode> prony_fit(const TimeSeries& series, const PronyConfig& cfg) {
  const std::vector<poles::ExponentialTerm> terms =
      prony_fit_terms(series, cfg);
  double peak = 0.0;
  for (double v : series.samples) peak = std::max(peak, std::abs(v));
  return poles::collapse_to_modes(terms, series.dt, series.duration(),
                                  cfg.amplitude_floor_rel * peak);
}

PowerSpectrum prony_energy_spectrum(std::span<const Mode> modes,
                                    double duration) {
  if (!(duration > 0.0)) {
    throw Error(Errc::BadConfig, "duration must be positive");
  }
  std::vector<std::pair<double, double>> points;
  points.reserve(modes.size());
  for (const Mode& mode : modes) {
    points.emplace_back(mode.f,
                        mode.amplitude * mode.amplitude *
                            poles::envelope_energy_integral(mode.alpha, duration));
  }
  std::sort(points.begin(), points.end());
  PowerSpectrum out;
  for (const auto& [f, e] : points) {
    if (!out.freqs.empty() && out.freqs.back() == f) {
      out.power.back() += e;  // merge equal frequencies, keep strict ascent
    } else {
      out.freqs.push_back(f);
      out.power.push_back(e);
    }
  }
  return out;
}

std::pair<Mode, PowerSpectrum> dominant_mode_prony(const TimeSeries& series,
                                                   const PronyConfig& cfg,
                                                   const Band& band) {
  validate_band(band);
  const std::vector<Mode> modes = prony_fit(series, cfg);
  const PowerSpectrum spectrum =
      prony_energy_spectrum(modes, series.duration());
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

}  // namespace modalkit::prony
