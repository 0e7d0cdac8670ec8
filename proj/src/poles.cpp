// src/poles.cpp

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

#include "modalkit/poles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace modalkit::poles {

std::vector<ExponentialTerm> solve_residues(
    std::span<const std::complex<double>> poles,
    std::span<const double> samples) {
  const std::size_t n = samples.size();
  const std::size_t p = poles.size();
  std::vector<ExponentialTerm> terms(p);
  for (std::size_t k = 0; k < p; ++k) terms[k].z = poles[k];
  if (p == 0 || n == 0) return terms;

  // Poles this explosive would overflow z^n; they cannot describe the data.
  const double max_log_mag = 700.0 / static_cast<double>(n);
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < p; ++k) {
    const double mag = std::abs(poles[k]);
    if (mag > 0.0 && std::log(mag) < max_log_mag) usable.push_back(k);
  }
  if (usable.empty()) return terms;

  Eigen::MatrixXcd vandermonde(n, usable.size());
  for (std::size_t col = 0; col < usable.size(); ++col) {
    std::complex<double> value(1.0, 0.0);
    const std::complex<double> z = poles[usable[col]];
    for (std::size_t row = 0; row < n; ++row) {
      vandermonde(static_cast<Eigen::Index>(row),
                  static_cast<Eigen::Index>(col)) = value;
      value *= z;
    }
  }
  Eigen::VectorXcd rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs(static_cast<Eigen::Index>(i)) = samples[i];

  const Eigen::VectorXcd solution =
      vandermonde.colPivHouseholderQr().solve(rhs);
  for (std::size_t col = 0; col < usable.size(); ++col) {
    terms[usable[col]].residue = solution(static_cast<Eigen::Index>(col));
  }
  return terms;
}

std::vector<Mode> collapse_to_modes(std::span<const ExponentialTerm> terms,
                                    double dt, double duration,
                                    double amplitude_floor) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double nyquist = 0.5 / dt;
  std::vector<Mode> modes;
  for (const ExponentialTerm& term : terms) {
    const double mag = std::abs(term.z);
    if (!(mag > 0.0) || !std::isfinite(mag)) continue;
    const double f_signed = std::arg(term.z) / (two_pi * dt);
    if (f_signed < 0.0) continue;  // conjugate member carries the same mode
    if (f_signed >= nyquist) continue;

    Mode mode;
    mode.f = f_signed;
    mode.alpha = std::log(mag) / dt;
    if (f_signed > 0.0) {
      mode.amplitude = 2.0 * std::abs(term.residue);
      mode.phase = normalize_phase(std::arg(term.residue));
    } else {
      // Real pole: residue is real for real data; keep the sign as phase.
      mode.amplitude = std::abs(term.residue);
      mode.phase = term.residue.real() < 0.0 ? std::numbers::pi : 0.0;
    }
    if (!(mode.amplitude > amplitude_floor)) continue;
    mode.energy = mode.amplitude * mode.amplitude *
                  envelope_energy_integral(mode.alpha, duration);
    modes.push_back(mode);
  }
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.f != b.f) return a.f < b.f;
    return a.amplitude > b.amplitude;
  });
  return modes;
}

double envelope_energy_integral(double alpha, double duration) {
  if (alpha == 0.0) return duration;
  return std::expm1(2.0 * alpha * duration) / (2.0 * alpha);
}

std::optional<std::size_t> argmax_energy_in_band(std::span<const Mode> modes,
                                                 const Band& band) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (!band.contains(modes[i].f)) continue;
    if (!best) {
      best = i;
      continue;
    }
    const Mode& current = modes[*best];
    const double scale = std::max(modes[i].energy, current.energy);
    if (modes[i].energy > current.energy + 1e-12 * scale) {
      best = i;
    } else if (std::abs(modes[i].energy - current.energy) <= 1e-12 * scale &&
               modes[i].f < current.f) {
      best = i;
    }
  }
  return best;
}

}  // namespace modalkit::poles
