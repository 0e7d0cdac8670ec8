// include/modalkit/hht.hpp

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

#ifndef MODALKIT_HHT_HPP
#define MODALKIT_HHT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "modalkit/types.hpp"

namespace modalkit::hht {

struct EmdConfig {
  /// Sifting stop: SD between consecutive candidates below this accepts the
  /// component (0.2-0.3 is the usual working range).
  double sd_threshold = 0.2;
  int max_sift = 100;
  int max_imfs = 12;
};

/// Empirical-mode decomposition result. Components sum with the residue back
/// to the input exactly (each component is a difference of consecutive
/// residuals). `flagged[i]` marks a component returned at the max_sift cap
/// while still violating the extrema/zero-crossing rule.
struct ImfSet {
  std::vector<TimeSeries> imfs;
  TimeSeries residue;
  std::vector<int> sift_counts;
  std::vector<bool> flagged;
};

/// Instantaneous description of one component: amplitude envelope, unwrapped
/// phase, and phase-derivative frequency in Hz.
struct AnalyticImf {
  std::vector<double> amplitude;
  std::vector<double> phase;
  std::vector<double> inst_freq;
  double dt = 1.0;
};

/// Amplitude-weighted instantaneous-frequency histogram over a band; `power`
/// holds accumulated mass per bin (not a density).
struct MarginalSpectrum {
  PowerSpectrum spectrum;
  double bin_width = 0.0;
  /// Samples skipped because phase unwrapping produced a negative frequency.
  std::int64_t skipped_negative_freq = 0;
  /// Everything accumulated into bins, summed in accumulation order.
  double total_mass = 0.0;
};

/// Interior local maxima/minima (plateaus report their midpoint).
void find_extrema(const std::vector<double>& x, std::vector<int>& maxima,
                  std::vector<int>& minima);

/// Count of sign changes, ignoring exact zeros between same-sign samples.
int zero_crossings(const std::vector<double>& x);

/// A component is well formed when its extrema and zero-crossing counts
/// differ by at most one.
bool is_well_formed(const std::vector<double>& x);

/// Sifts the record into intrinsic components: cubic-spline envelopes
/// through mirrored extrema, envelope-mean subtraction until the SD
/// criterion accepts a well-formed component or max_sift is reached;
/// extraction stops when the residue has fewer than two extrema of either
/// kind or max_imfs components exist. Throws TooFewExtrema when the input
/// itself has fewer than two maxima or two minima.
ImfSet emd(const TimeSeries& series, const EmdConfig& cfg = {});

/// Analytic-signal description of one component: amplitude from the
/// quadrature pair, unwrapped phase, instantaneous frequency by central
/// differences (one-sided at the ends). An all-zero component reports zero
/// amplitude and zero frequency.
AnalyticImf hilbert_analytic(const TimeSeries& imf);

/// Accumulates amplitude * dt (or amplitude^2 * dt when energy_weighted)
/// into uniform instantaneous-frequency bins spanning the band, per
/// component, skipping 5% of samples at each edge, near-zero amplitudes
/// (below 1e-6 of the component's peak) and negative frequencies.
MarginalSpectrum hilbert_marginal_spectrum(const ImfSet& imf_set,
                                           const Band& band, int n_bins = 512,
                                           bool energy_weighted = false);

/// Decompose, accumulate the marginal, pick the heaviest in-band bin with a
/// linear parabolic refinement, snapped. Errors propagate from emd.
std::pair<double, MarginalSpectrum> dominant_mode_hms(const TimeSeries& series,
                                                      const EmdConfig& cfg,
                                                      const Band& band,
                                                      int n_bins = 512);

}  // namespace modalkit::hht

#endif  // MODALKIT_HHT_HPP
