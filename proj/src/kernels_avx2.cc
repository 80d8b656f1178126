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

// AVX2 kernel variants. Elementwise kernels use plain mul/add (no FMA) so
// they produce bit-identical results to the scalar reference; reductions
// widen each lane to double before accumulating.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "emonoise/kernels.h"

namespace emonoise::kernels::avx2 {

bool supported() {
  return __builtin_cpu_supports("avx2") != 0;
}

namespace {

inline double hsum_pd(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double sum_squares(const float* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_loadu_ps(x + i);
    __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(v));
    __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(lo, lo));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(hi, hi));
  }
  double acc = hsum_pd(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    acc += static_cast<double>(x[i]) * static_cast<double>(x[i]);
  }
  return acc;
}

double dot(const float* a, const float* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 va = _mm256_loadu_ps(a + i);
    __m256 vb = _mm256_loadu_ps(b + i);
    __m256d alo = _mm256_cvtps_pd(_mm256_castps256_ps128(va));
    __m256d ahi = _mm256_cvtps_pd(_mm256_extractf128_ps(va, 1));
    __m256d blo = _mm256_cvtps_pd(_mm256_castps256_ps128(vb));
    __m256d bhi = _mm256_cvtps_pd(_mm256_extractf128_ps(vb, 1));
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(alo, blo));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(ahi, bhi));
  }
  double acc = hsum_pd(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) {
    acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return acc;
}

float peak_abs(const float* x, std::size_t n) {
  const __m256 abs_mask = _mm256_castsi256_ps(_mm256_set1_epi32(0x7fffffff));
  __m256 vpeak = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_and_ps(_mm256_loadu_ps(x + i), abs_mask);
    vpeak = _mm256_max_ps(vpeak, v);
  }
  __m128 m = _mm_max_ps(_mm256_castps256_ps128(vpeak),
                        _mm256_extractf128_ps(vpeak, 1));
  m = _mm_max_ps(m, _mm_movehl_ps(m, m));
  m = _mm_max_ss(m, _mm_shuffle_ps(m, m, 1));
  float peak = _mm_cvtss_f32(m);
  for (; i < n; ++i) {
    float a = std::fabs(x[i]);
    if (a > peak) peak = a;
  }
  return peak;
}

void scale(float* x, std::size_t n, float g) {
  const __m256 vg = _mm256_set1_ps(g);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_ps(x + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), vg));
  }
  for (; i < n; ++i) x[i] *= g;
}

void scaled_add(float* dst, const float* src, std::size_t n, float g) {
  const __m256 vg = _mm256_set1_ps(g);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 d = _mm256_loadu_ps(dst + i);
    __m256 s = _mm256_mul_ps(_mm256_loadu_ps(src + i), vg);
    _mm256_storeu_ps(dst + i, _mm256_add_ps(d, s));
  }
  for (; i < n; ++i) dst[i] += g * src[i];
}

void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero) {
  const __m256 vg0 = _mm256_set1_ps(g0);
  const __m256 vstep = _mm256_set1_ps(step);
  const __m256 lane = _mm256_setr_ps(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256 zero = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 idx = _mm256_add_ps(_mm256_set1_ps(static_cast<float>(i)), lane);
    __m256 g = _mm256_add_ps(vg0, _mm256_mul_ps(vstep, idx));
    if (clamp_zero) g = _mm256_max_ps(g, zero);
    _mm256_storeu_ps(x + i, _mm256_mul_ps(_mm256_loadu_ps(x + i), g));
  }
  for (; i < n; ++i) {
    float g = g0 + step * static_cast<float>(i);
    if (clamp_zero && g < 0.0f) g = 0.0f;
    x[i] *= g;
  }
}

}  // namespace emonoise::kernels::avx2

#endif  // x86_64
