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

// NEON kernel variants (aarch64 baseline). Same contracts as the AVX2 file:
// no fused ops in the elementwise kernels, double accumulation in reductions.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

#include "emonoise/kernels.h"

namespace emonoise::kernels::neon {

double sum_squares(const float* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t v = vld1q_f32(x + i);
    float64x2_t lo = vcvt_f64_f32(vget_low_f32(v));
    float64x2_t hi = vcvt_high_f64_f32(v);
    acc0 = vaddq_f64(acc0, vmulq_f64(lo, lo));
    acc1 = vaddq_f64(acc1, vmulq_f64(hi, hi));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    acc += static_cast<double>(x[i]) * static_cast<double>(x[i]);
  }
  return acc;
}

double dot(const float* a, const float* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t va = vld1q_f32(a + i);
    float32x4_t vb = vld1q_f32(b + i);
    acc0 = vaddq_f64(
        acc0, vmulq_f64(vcvt_f64_f32(vget_low_f32(va)),
                        vcvt_f64_f32(vget_low_f32(vb))));
    acc1 = vaddq_f64(acc1, vmulq_f64(vcvt_high_f64_f32(va),
                                     vcvt_high_f64_f32(vb)));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) {
    acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return acc;
}

float peak_abs(const float* x, std::size_t n) {
  float32x4_t vpeak = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vpeak = vmaxq_f32(vpeak, vabsq_f32(vld1q_f32(x + i)));
  }
  float peak = vmaxvq_f32(vpeak);
  for (; i < n; ++i) {
    float a = std::fabs(x[i]);
    if (a > peak) peak = a;
  }
  return peak;
}

void scale(float* x, std::size_t n, float g) {
  const float32x4_t vg = vdupq_n_f32(g);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    vst1q_f32(x + i, vmulq_f32(vld1q_f32(x + i), vg));
  }
  for (; i < n; ++i) x[i] *= g;
}

void scaled_add(float* dst, const float* src, std::size_t n, float g) {
  const float32x4_t vg = vdupq_n_f32(g);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t d = vld1q_f32(dst + i);
    float32x4_t s = vmulq_f32(vld1q_f32(src + i), vg);
    vst1q_f32(dst + i, vaddq_f32(d, s));
  }
  for (; i < n; ++i) dst[i] += g * src[i];
}

void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero) {
  const float32x4_t vg0 = vdupq_n_f32(g0);
  const float32x4_t vstep = vdupq_n_f32(step);
  const float32x4_t lane = {0.0f, 1.0f, 2.0f, 3.0f};
  const float32x4_t zero = vdupq_n_f32(0.0f);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    float32x4_t idx = vaddq_f32(vdupq_n_f32(static_cast<float>(i)), lane);
    float32x4_t g = vaddq_f32(vg0, vmulq_f32(vstep, idx));
    if (clamp_zero) g = vmaxq_f32(g, zero);
    vst1q_f32(x + i, vmulq_f32(vld1q_f32(x + i), g));
  }
  for (; i < n; ++i) {
    float g = g0 + step * static_cast<float>(i);
    if (clamp_zero && g < 0.0f) g = 0.0f;
    x[i] *= g;
  }
}

}  // namespace emonoise::kernels::neon

#endif  // __aarch64__
