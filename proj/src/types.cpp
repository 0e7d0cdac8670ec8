// src/types.cpp

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

#include "modalkit/types.hpp"

#include <cmath>
#include <numbers>

namespace modalkit {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::TooShort: return "TooShort";
    case Errc::BadDt: return "BadDt";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::AliasedMode: return "AliasedMode";
    case Errc::EmptyBand: return "EmptyBand";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::NoModeInBand: return "NoModeInBand";
    case Errc::BadPencilParameter: return "BadPencilParameter";
    case Errc::RankZero: return "RankZero";
    case Errc::WindowTooLong: return "WindowTooLong";
    case Errc::TooFewExtrema: return "TooFewExtrema";
    case Errc::ParseError: return "ParseError";
    case Errc::NonUniformSampling: return "NonUniformSampling";
    case Errc::EmptyFile: return "EmptyFile";
    case Errc::NoMethodsSelected: return "NoMethodsSelected";
    case Errc::IoError: return "IoError";
    case Errc::BadBand: return "BadBand";
    case Errc::BadConfig: return "BadConfig";
  }
  return "UnknownError";
}

void validate_band(const Band& band) {
  if (!(band.f_lo >= 0.0) || !(band.f_hi > band.f_lo)) {
    throw Error(Errc::BadBand, "band must satisfy 0 <= f_lo < f_hi, got [" +
                                   std::to_string(band.f_lo) + ", " +
                                   std::to_string(band.f_hi) + "]");
  }
}

double normalize_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double p = std::remainder(phase, two_pi);  // lands in [-pi, pi]
  if (p <= -std::numbers::pi) p += two_pi;
  return p;
}

}  // namespace modalkit
