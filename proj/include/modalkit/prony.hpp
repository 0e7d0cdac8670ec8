// include/modalkit/prony.hpp

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

#ifndef MODALKIT_PRONY_HPP
#define MODALKIT_PRONY_HPP

#include <span>
#include <utility>
#include <vector>

#include "modalkit/poles.hpp"
#include "modalkit/types.hpp"

namespace modalkit::prony {

struct PronyConfig {
  enum class OrderPolicy { kFixed, kSvdAuto };

  /// Model order (number of exponential components). 0 under kSvdAuto means
  /// "start from the generous default min(N/3, 60)". Must be an even
  /// integer >= 2 under kFixed.
  int order_p = 0;
  OrderPolicy order_policy = OrderPolicy::kSvdAuto;
  /// Relative singular-value cutoff for the automatic effective order.
  double svd_threshold = 1e-8;
  /// Modes below this fraction of max|x| are numerical-noise roots.
  double amplitude_floor_rel = 1e-10;
};

/// Exponential fit by least-squares linear prediction: solve the order-p
/// prediction system, root the characteristic polynomial, and recover
/// residues through the Vandermonde least squares. Returns collapsed
/// conjugate-pair modes sorted by frequency, energies integrated over the
/// record duration.
///
/// Under kSvdAuto the prediction matrix is built at a generous order and
/// refit at the number of singular values above threshold * sigma_max; a
/// signal of effective rank zero yields an empty list. Under kFixed a
/// rank-deficient prediction matrix throws IllConditioned.
/// Expects a detrended record with N > 2*order.
std::vector<Mode> prony_fit(const TimeSeries& series,
                            const PronyConfig& cfg = {});

/// Raw complex decomposition behind prony_fit (poles and residues before the
/// conjugate-pair collapse).
std::vector<poles::ExponentialTerm> prony_fit_terms(const TimeSeries& series,
                                                    const PronyConfig& cfg = {});

/// One energy point per mode, E_k = amplitude_k^2 * integral_0^D of the
/// squared envelope, sorted by frequency (equal frequencies merge).
PowerSpectrum prony_energy_spectrum(std::span<const Mode> modes,
                                    double duration);

/// Highest-energy in-band mode plus the energy spectrum of the whole fit.
/// The returned mode's frequency is snapped to the reporting grid.
/// Throws NoModeInBand when the fit has no mode inside the band.
std::pair<Mode, PowerSpectrum> dominant_mode_prony(const TimeSeries& series,
                                                   const PronyConfig& cfg,
                                                   const Band& band);

}  // namespace modalkit::prony

#endif  // MODALKIT_PRONY_HPP
