// include/modalkit/matrix_pencil.hpp

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

#ifndef MODALKIT_MATRIX_PENCIL_HPP
#define MODALKIT_MATRIX_PENCIL_HPP

#include <span>
#include <utility>
#include <vector>

#include "modalkit/poles.hpp"
#include "modalkit/types.hpp"

namespace modalkit::pencil {

struct PencilConfig {
  enum class RankPolicy { kFixed, kSvdAuto };

  /// Hankel split dimension L. 0 means the default floor(N/3), the usual
  /// noise-performance sweet spot.
  int pencil_L = 0;
  RankPolicy rank_policy = RankPolicy::kSvdAuto;
  /// Number of retained poles under kFixed.
  int fixed_rank = 0;
  /// Relative singular-value cutoff under kSvdAuto (1e-8 separates machine
  /// rank; prefer ~1e-3 on noisy field data).
  double svd_threshold = 1e-8;
  /// Sliding-analysis geometry, seconds.
  double window_len_s = 20.0;
  double step_s = 5.0;
  /// Modes below this fraction of max|x| are dropped.
  double amplitude_floor_rel = 1e-10;
};

/// One sliding-window result: every mode the window yielded plus the
/// highest-energy in-band one.
struct DominantModeReport {
  double window_start_s = 0.0;
  double window_len_s = 0.0;
  Mode dominant;
  std::vector<Mode> all_modes;
};

/// Decomposes the record into exponentially decaying sinusoids: Hankel
/// matrix -> SVD -> rank-truncated shifted pencil of the right singular
/// vectors -> pole eigenvalues -> Vandermonde residues -> collapsed modes.
/// Throws BadPencilParameter for an unusable L or fixed rank, RankZero when
/// every singular value sits below the cutoff. Expects a detrended record.
std::vector<Mode> pencil_fit(const TimeSeries& series,
                             const PencilConfig& cfg = {});

/// Raw poles/residues behind pencil_fit.
std::vector<poles::ExponentialTerm> pencil_fit_terms(const TimeSeries& series,
                                                     const PencilConfig& cfg = {});

/// E = amplitude^2 * integral_0^duration exp(2*alpha*t) dt, closed form.
double mode_energy(const Mode& mode, double duration);

/// Dominant-mode track along the record: one report per window position at
/// stride step_s. Windows whose fit yields no in-band mode (for example a
/// RankZero tail) are omitted. Throws WindowTooLong when the window exceeds
/// the record.
std::vector<DominantModeReport> sliding_dominant(const TimeSeries& series,
                                                 const PencilConfig& cfg,
                                                 const Band& band);

/// Fit followed by evaluation of the fitted modes on the record's grid.
/// Returns the fitted record and RMS(x - fit)/RMS(x).
std::pair<TimeSeries, double> reconstruct_mpm(const TimeSeries& series,
                                              const PencilConfig& cfg = {});

/// Whole-record dominant mode (the comparison-table entry for this method):
/// highest-energy in-band mode of a single full-length fit, frequency
/// snapped, plus the per-mode energy spectrum.
std::pair<Mode, PowerSpectrum> dominant_mode_mpm(const TimeSeries& series,
                                                 const PencilConfig& cfg,
                                                 const Band& band);

}  // namespace modalkit::pencil

#endif  // MODALKIT_MATRIX_PENCIL_HPP
