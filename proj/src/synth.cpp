// src/synth.cpp

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

#include "modalkit/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "modalkit/core.hpp"

namespace modalkit::synth {

TimeSeries generate_ringdown(const SynthSpec& spec) {
  if (!(spec.dt > 0.0)) {
    throw Error(Errc::BadDt, "dt must be positive");
  }
  const auto n = static_cast<std::size_t>(std::llround(spec.duration / spec.dt));
  if (n < 4) {
    throw Error(Errc::TooShort, "duration/dt gives fewer than 4 samples");
  }
  const double nyquist = 0.5 / spec.dt;
  for (const Mode& mode : spec.modes) {
    if (mode.f >= nyquist) {
      throw Error(Errc::AliasedMode,
                  "mode at " + std::to_string(mode.f) + " Hz reaches Nyquist " +
                      std::to_string(nyquist) + " Hz");
    }
  }
  TimeSeries out = reconstruct(spec.modes, n, spec.dt);
  out.label = spec.label;
  if (spec.noise_std > 0.0) {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, spec.noise_std);
    for (double& x : out.samples) x += gauss(rng);
  }
  return out;
}

std::vector<std::string> resolvability_warnings(const SynthSpec& spec) {
  std::vector<std::string> warnings;
  const double min_gap = 1.0 / spec.duration;
  for (std::size_t i = 0; i < spec.modes.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.modes.size(); ++j) {
      const double gap = std::abs(spec.modes[i].f - spec.modes[j].f);
      if (gap > 0.0 && gap <= min_gap) {
        warnings.push_back("modes at " + std::to_string(spec.modes[i].f) +
                           " Hz and " + std::to_string(spec.modes[j].f) +
                           " Hz are closer than 1/duration = " +
                           std::to_string(min_gap) + " Hz");
      }
    }
  }
  return warnings;
}

SynthSpec default_two_mode_scenario() {
  SynthSpec spec;
  spec.modes = {
      Mode{0.2, -0.02, 1.0, 0.0, 0.0},
      Mode{0.8, -0.05, 0.4, std::numbers::pi / 4.0, 0.0},
  };
  spec.dt = 0.1;
  spec.duration = 60.0;
  spec.noise_std = 0.005;
  spec.seed = 1;
  spec.label = "two_mode";
  return spec;
}

}  // namespace modalkit::synth
