// src/fft.cpp

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

#include "modalkit/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <utility>

namespace modalkit::fft {

namespace {

// One cached plan (and its aligned buffers) per transform length and
// direction. Plans are reused via copy-in/copy-out so callers never touch
// FFTW allocation or alignment rules. Single-threaded by design.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(std::span<const std::complex<double>> in, int sign,
               std::vector<std::complex<double>>& out) {
    const std::size_t n = in.size();
    Entry& entry = get(n, sign);
    // std::complex<double> is array-compatible with double[2].
    std::memcpy(entry.in, reinterpret_cast<const fftw_complex*>(in.data()),
                n * sizeof(fftw_complex));
    fftw_execute(entry.plan);
    out.resize(n);
    std::memcpy(reinterpret_cast<fftw_complex*>(out.data()), entry.out,
                n * sizeof(fftw_complex));
  }

 private:
  struct Entry {
    fftw_complex* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;
  };

  Entry& get(std::size_t n, int sign) {
    auto key = std::make_pair(n, sign);
    auto it = entries_.find(key);
    if (it != entries_.end()) return it->second;
    Entry entry;
    entry.in = fftw_alloc_complex(n);
    entry.out = fftw_alloc_complex(n);
    entry.plan = fftw_plan_dft_1d(static_cast<int>(n), entry.in, entry.out,
                                  sign, FFTW_ESTIMATE);
    return entries_.emplace(key, entry).first->second;
  }

  ~PlanCache() {
    for (auto& [key, entry] : entries_) {
      fftw_destroy_plan(entry.plan);
      fftw_free(entry.in);
      fftw_free(entry.out);
    }
  }

  std::map<std::pair<std::size_t, int>, Entry> entries_;
};

}  // namespace

std::vector<std::complex<double>> dft(std::span<const std::complex<double>> x) {
  std::vector<std::complex<double>> out;
  if (x.empty()) return out;
  PlanCache::instance().execute(x, FFTW_FORWARD, out);
  return out;
}

std::vector<std::complex<double>> idft(std::span<const std::complex<double>> x) {
  std::vector<std::complex<double>> out;
  if (x.empty()) return out;
  PlanCache::instance().execute(x, FFTW_BACKWARD, out);
  return out;
}

std::vector<std::complex<double>> dft_real(std::span<const double> x) {
  std::vector<std::complex<double>> tmp(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) tmp[i] = x[i];
  return dft(tmp);
}

std::vector<std::complex<double>> analytic_signal(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> spec = dft_real(x);
  // Double the positive half, zero the negative half; DC and (for even N)
  // the Nyquist bin stay single.
  const std::size_t last_pos = (n % 2 == 0) ? n / 2 - 1 : n / 2;
  for (std::size_t k = 1; k <= last_pos && k < n; ++k) spec[k] *= 2.0;
  for (std::size_t k = n / 2 + 1; k < n; ++k) spec[k] = 0.0;
  std::vector<std::complex<double>> z = idft(spec);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& v : z) v *= inv_n;
  return z;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace modalkit::fft
