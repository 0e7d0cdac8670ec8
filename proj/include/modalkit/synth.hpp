// include/modalkit/synth.hpp

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

#ifndef MODALKIT_SYNTH_HPP
#define MODALKIT_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modalkit/types.hpp"

namespace modalkit::synth {

/// Ground-truth ringdown generator spec: a damped-sinusoid sum plus optional
/// seeded white Gaussian noise.
struct SynthSpec {
  std::vector<Mode> modes;
  double dt = 0.1;          // s
  double duration = 60.0;   // s
  double noise_std = 0.0;   // signal units
  std::uint64_t seed = 0;
  std::string label = "synth";
};

/// Evaluates the mode sum forward and adds noise_std-scaled Gaussian noise
/// from the seeded generator. noise_std == 0 is bit-identical to
/// core reconstruct; the same seed always reproduces the same record.
/// Throws AliasedMode when some mode frequency reaches Nyquist, TooShort
/// when duration/dt < 4.
TimeSeries generate_ringdown(const SynthSpec& spec);

/// Human-readable warnings for mode pairs closer than 1/duration (such pairs
/// are legal but no estimator can be expected to separate them).
std::vector<std::string> resolvability_warnings(const SynthSpec& spec);

/// The stock two-mode test scenario used throughout the test suites: a
/// dominant 0.2 Hz mode plus a weaker 0.8 Hz inter-area-range mode, 60 s at
/// 10 Hz sampling, mild noise, fixed seed.
SynthSpec default_two_mode_scenario();

}  // namespace modalkit::synth

#endif  // MODALKIT_SYNTH_HPP
