// tests/test_matrix_pencil.cpp

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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "modalkit/core.hpp"
#include "modalkit/prony.hpp"
#include "modalkit/synth.hpp"
#include "oracles.hpp"

using namespace modalkit;
using pencil::PencilConfig;

namespace {

bool close_rel(double est, double truth, double tol) {
  return std::abs(est - truth) <= tol * std::max(1.0, std::abs(truth));
}

std::vector<Mode> sorted_by_f(std::vector<Mode> modes) {
  std::sort(modes.begin(), modes.end(),
            [](const Mode& a, const Mode& b) { return a.f < b.f; });
  return modes;
}

}  // namespace

TEST_CASE("noiseless two-mode record is recovered exactly", "[mpm]") {
  const std::vector<Mode> truth = {
      Mode{0.2, -0.02, 1.0, 0.0, 0.0},
      Mode{0.8, -0.05, 0.4, std::numbers::pi / 4.0, 0.0},
  };
  const TimeSeries record = reconstruct(truth, 600, 0.1);
  const std::vector<Mode> fit = sorted_by_f(pencil::pencil_fit(record));
  REQUIRE(fit.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(close_rel(fit[i].f, truth[i].f, 1e-6));
    CHECK(close_rel(fit[i].alpha, truth[i].alpha, 1e-6));
    CHECK(close_rel(fit[i].amplitude, truth[i].amplitude, 1e-6));
    CHECK(close_rel(fit[i].phase, truth[i].phase, 1e-6));
  }
}

TEST_CASE("zero record reports RankZero", "[mpm]") {
  const TimeSeries zero = validate_series(std::vector<double>(200, 0.0), 0.1);
  bool caught = false;
  try {
    pencil::pencil_fit(zero);
  } catch (const Error& e) {
    caught = e.code() == Errc::RankZero;
  }
  CHECK(caught);
}

TEST_CASE("bad pencil parameters are rejected", "[mpm]") {
  const TimeSeries record =
      validate_series(oracles::gaussian_noise(50, 3), 0.1);
  PencilConfig cfg;
  cfg.pencil_L = 49;  // > N-2
  bool caught = false;
  try {
    pencil::pencil_fit(record, cfg);
  } catch (const Error& e) {
    caught = e.code() == Errc::BadPencilParameter;
  }
  CHECK(caught);

  PencilConfig fixed;
  fixed.rank_policy = PencilConfig::RankPolicy::kFixed;
  fixed.fixed_rank = 40;  // > min(L, N-L)
  caught = false;
  try {
    pencil::pencil_fit(record, fixed);
  } catch (const Error& e) {
    caught = e.code() == Errc::BadPencilParameter;
  }
  CHECK(caught);
}

TEST_CASE("mode energy closed forms", "[mpm]") {
  CHECK(pencil::mode_energy(Mode{0.2, 0.0, 2.0, 0.0, 0.0}, 10.0) ==
        Catch::Approx(40.0));
  CHECK(pencil::mode_energy(Mode{0.2, 0.0, 0.0, 0.0, 0.0}, 10.0) == 0.0);
  const double expected = oracles::simpson(
      [](double t) { return std::exp(-0.2 * t); }, 0.0, 60.0);
  CHECK(pencil::mode_energy(Mode{0.2, -0.1, 1.0, 0.0, 0.0}, 60.0) ==
        Catch::Approx(expected).epsilon(1e-9));
}

TEST_CASE("sliding windows track a stationary tone", "[mpm]") {
  const Mode truth{0.5, 0.0, 1.0, 0.0, 0.0};
  const TimeSeries record = reconstruct({&truth, 1}, 600, 0.1);
  PencilConfig cfg;
  cfg.window_len_s = 20.0;
  cfg.step_s = 5.0;
  const auto reports = pencil::sliding_dominant(record, cfg, Band{0.05, 5.0});
  REQUIRE(reports.size() == 9);  // starts 0,5,...,40
  for (const auto& report : reports) {
    CHECK(std::abs(report.dominant.f - 0.5) < 1e-6);
    CHECK(report.window_len_s == Catch::Approx(20.0));
    // dominant is a member of all_modes
    bool member = false;
    for (const Mode& m : report.all_modes) {
      if (std::abs(m.f - report.dominant.f) < 1e-9 &&
          m.amplitude == report.dominant.amplitude) {
        member = true;
      }
    }
    CHECK(member);
  }
}

TEST_CASE("window equal to the record gives exactly one report", "[mpm]") {
  const Mode truth{0.5, 0.0, 1.0, 0.0, 0.0};
  const TimeSeries record = reconstruct({&truth, 1}, 300, 0.1);
  PencilConfig cfg;
  cfg.window_len_s = 30.0;
  cfg.step_s = 5.0;
  const auto reports = pencil::sliding_dominant(record, cfg, Band{0.05, 5.0});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].window_start_s == 0.0);
}

TEST_CASE("window longer than the record is rejected", "[mpm]") {
  const Mode truth{0.5, 0.0, 1.0, 0.0, 0.0};
  const TimeSeries record = reconstruct({&truth, 1}, 300, 0.1);
  PencilConfig cfg;
  cfg.window_len_s = 31.0;
  bool caught = false;
  try {
    pencil::sliding_dominant(record, cfg, Band{0.05, 5.0});
  } catch (const Error& e) {
    caught = e.code() == Errc::WindowTooLong;
  }
  CHECK(caught);
}

TEST_CASE("reconstruction error vanishes on exact models", "[mpm]") {
  const std::vector<Mode> truth = {
      Mode{0.3, -0.05, 1.0, 0.7, 0.0},
      Mode{1.1, -0.1, 0.6, -0.4, 0.0},
  };
  const TimeSeries record = reconstruct(truth, 500, 0.1);
  const auto [fit, rel_err] = pencil::reconstruct_mpm(record);
  REQUIRE(fit.size() == record.size());
  CHECK(rel_err < 1e-8);
}

TEST_CASE("reconstruction error sits at the noise floor for a noisy tone",
          "[mpm]") {
  // 20 dB SNR: noise rms is a tenth of the signal rms.
  const Mode truth{0.4, 0.0, 1.0, 0.0, 0.0};
  const TimeSeries clean = reconstruct({&truth, 1}, 600, 0.1);
  const double noise_std = oracles::rms(clean.samples) / 10.0;
  synth::SynthSpec spec;
  spec.modes = {truth};
  spec.dt = 0.1;
  spec.duration = 60.0;
  spec.noise_std = noise_std;
  spec.seed = 77;
  const TimeSeries noisy = synth::generate_ringdown(spec);
  PencilConfig cfg;
  cfg.rank_policy = PencilConfig::RankPolicy::kFixed;
  cfg.fixed_rank = 2;
  const auto [fit, rel_err] = pencil::reconstruct_mpm(noisy, cfg);
  CHECK(rel_err > 0.08);
  CHECK(rel_err < 0.12);
}

TEST_CASE("pure noise yields no usable structure", "[mpm]") {
  // Documented disjunction: a structureless record either trips RankZero or
  // reconstructs with an error of order one (0.57..1.0 observed over seeds),
  // never the <1e-2 of a real ringdown.
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    const TimeSeries record =
        validate_series(oracles::gaussian_noise(600, seed), 0.1);
    try {
      const auto [fit, rel_err] = pencil::reconstruct_mpm(record);
      CHECK(rel_err > 0.3);
      CHECK(rel_err < 1.2);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::RankZero);
    }
  }
}

TEST_CASE("noise robustness: pencil beats plain prediction at equal order",
          "[mpm][statistical]") {
  // 100 seeded 20 dB trials of the stock scenario; compare median dominant
  // frequency errors at the same fixed model order.
  synth::SynthSpec base = synth::default_two_mode_scenario();
  const TimeSeries clean = reconstruct(base.modes, 600, 0.1);
  const double noise_std = oracles::rms(clean.samples) / 10.0;

  std::vector<double> err_pencil, err_prony;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    synth::SynthSpec spec = base;
    spec.noise_std = noise_std;
    spec.seed = seed;
    const TimeSeries record =
        detrend(synth::generate_ringdown(spec), DetrendPolicy::kLinear);

    PencilConfig pencil_cfg;
    pencil_cfg.rank_policy = PencilConfig::RankPolicy::kFixed;
    pencil_cfg.fixed_rank = 8;
    prony::PronyConfig prony_cfg;
    prony_cfg.order_policy = prony::PronyConfig::OrderPolicy::kFixed;
    prony_cfg.order_p = 8;

    const Band band{0.05, 5.0};
    try {
      const auto [mode_mpm, s1] =
          pencil::dominant_mode_mpm(record, pencil_cfg, band);
      err_pencil.push_back(std::abs(mode_mpm.f - 0.2));
    } catch (const Error&) {
      err_pencil.push_back(5.0);
    }
    try {
      const auto [mode_prony, s2] =
          prony::dominant_mode_prony(record, prony_cfg, band);
      err_prony.push_back(std::abs(mode_prony.f - 0.2));
    } catch (const Error&) {
      err_prony.push_back(5.0);
    }
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  CHECK(median(err_pencil) <= median(err_prony));
}

TEST_CASE("dominant frequency survives rescaling bit for bit", "[mpm]") {
  const TimeSeries record = detrend(
      synth::generate_ringdown(synth::default_two_mode_scenario()),
      DetrendPolicy::kLinear);
  TimeSeries scaled = record;
  for (double& v : scaled.samples) v *= 3.7;
  PencilConfig cfg;
  cfg.svd_threshold = 1e-3;
  const auto [m1, s1] = pencil::dominant_mode_mpm(record, cfg, Band{0.05, 5.0});
  const auto [m2, s2] = pencil::dominant_mode_mpm(scaled, cfg, Band{0.05, 5.0});
  REQUIRE(m1.f == m2.f);
  CHECK(std::abs(m1.alpha - m2.alpha) < 1e-9);
}
