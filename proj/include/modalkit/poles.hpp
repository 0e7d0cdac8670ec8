// include/modalkit/poles.hpp

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

#ifndef MODALKIT_POLES_HPP
#define MODALKIT_POLES_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "modalkit/types.hpp"

namespace modalkit::poles {

/// One term of the complex exponential decomposition
/// x[n] ~ sum_k residue_k * z_k^n.
struct ExponentialTerm {
  std::complex<double> z;
  std::complex<double> residue;
};

/// Least-squares residues for the given discrete poles against the samples
/// (the overdetermined Vandermonde system). Poles whose magnitude would
/// overflow within the record length get a zero residue.
std::vector<ExponentialTerm> solve_residues(
    std::span<const std::complex<double>> poles,
    std::span<const double> samples);

/// Collapses conjugate-pair terms into real damped-cosine modes:
///   z = exp((alpha + i*2*pi*f) * dt),   amplitude = 2*|residue| (pairs)
/// Real positive poles become f = 0 entries with amplitude |residue|;
/// negative-frequency members and Nyquist poles are dropped, as are modes
/// with amplitude below `amplitude_floor`. Output sorted by frequency;
/// energies integrate the squared envelope over `duration`.
std::vector<Mode> collapse_to_modes(std::span<const ExponentialTerm> terms,
                                    double dt, double duration,
                                    double amplitude_floor);

/// Closed form of integral_0^D exp(2*alpha*t) dt (D at alpha == 0), the
/// squared-envelope time integral shared by the energy rankings.
double envelope_energy_integral(double alpha, double duration);

/// Index of the highest-energy mode inside the band; energy ties within
/// 1e-12 relative break toward the lower frequency. Empty when no mode's
/// frequency falls inside the band.
std::optional<std::size_t> argmax_energy_in_band(std::span<const Mode> modes,
                                                 const Band& band);

}  // namespace modalkit::poles

#endif  // MODALKIT_POLES_HPP
