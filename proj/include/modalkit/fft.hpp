// include/modalkit/fft.hpp

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

#ifndef MODALKIT_FFT_HPP
#define MODALKIT_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace modalkit::fft {

/// Unnormalized forward DFT: X[k] = sum_n x[n] * exp(-2*pi*i*k*n/N).
std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x);

/// Unnormalized backward DFT: y[n] = sum_k X[k] * exp(+2*pi*i*k*n/N).
/// dft followed by idft multiplies by N.
std::vector<std::complex<double>> idft(std::span<const std::complex<double>> x);

/// Forward DFT of a real record, full N complex bins.
std::vector<std::complex<double>> dft_real(std::span<const double> x);

/// Analytic signal z with Re(z)=x and Im(z) the Hilbert transform of x,
/// built by zeroing the negative-frequency half of the spectrum.
std::vector<std::complex<double>> analytic_signal(std::span<const double> x);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace modalkit::fft

#endif  // MODALKIT_FFT_HPP
