// Copyright 2026 The Emonoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMONOISE_FFT_H_
#define EMONOISE_FFT_H_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace emonoise {

// In-place iterative radix-2 FFT. x.size() must be a power of two.
// Self-contained so results are bit-stable across runs and thread-safe
// without plan management.
void fft_inplace(std::vector<std::complex<double>>& x, bool inverse);

// Power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// One-sided power spectrum of a real frame zero-padded to nfft
// (power of two). Returns nfft/2 + 1 bins of |X[k]|^2.
std::vector<double> power_spectrum(std::span<const float> frame,
                                   std::size_t nfft);

}  // namespace emonoise

#endif  // EMONOISE_FFT_H_
