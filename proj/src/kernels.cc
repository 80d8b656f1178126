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

#include "emonoise/kernels.h"

#include <cmath>
#include <cstdlib>

namespace emonoise::kernels {

namespace ref {

double sum_squares(const float* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<double>(x[i]) * static_cast<double>(x[i]);
  }
  return acc;
}

double dot(const float* a, const float* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
  }
  return acc;
}

float peak_abs(const float* x, std::size_t n) {
  float peak = 0.0f;
  for (std::size_t i = 0; i < n; ++i) {
    float a = std::fabs(x[i]);
    if (a > peak) peak = a;
  }
  return peak;
}

void scale(float* x, std::size_t n, float g) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= g;
}

void scaled_add(float* dst, const float* src, std::size_t n, float g) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += g * src[i];
}

void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero) {
  for (std::size_t i = 0; i < n; ++i) {
    float g = g0 + step * static_cast<float>(i);
    if (clamp_zero && g < 0.0f) g = 0.0f;
    x[i] *= g;
  }
}

}  // namespace ref

double (*sum_squares)(const float*, std::size_t) = ref::sum_squares;
double (*dot)(const float*, const float*, std::size_t) = ref::dot;
float (*peak_abs)(const float*, std::size_t) = ref::peak_abs;
void (*scale)(float*, std::size_t, float) = ref::scale;
void (*scaled_add)(float*, const float*, std::size_t, float) = ref::scaled_add;
void (*ramp_mul)(float*, std::size_t, float, float, bool) = ref::ramp_mul;

namespace {

std::string g_isa = "scalar";

std::string resolve() {
  if (const char* force = std::getenv("EMONOISE_FORCE_SCALAR");
      force != nullptr && force[0] == '1') {
    return "scalar";
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2::supported()) {
    sum_squares = avx2::sum_squares;
    dot = avx2::dot;
    peak_abs = avx2::peak_abs;
    scale = avx2::scale;
    scaled_add = avx2::scaled_add;
    ramp_mul = avx2::ramp_mul;
    return "avx2";
  }
#elif defined(__aarch64__)
  sum_squares = neon::sum_squares;
  dot = neon::dot;
  peak_abs = neon::peak_abs;
  scale = neon::scale;
  scaled_add = neon::scaled_add;
  ramp_mul = neon::ramp_mul;
  return "neon";
#endif
  return "scalar";
}

const int g_init = [] {
  g_isa = resolve();
  return 0;
}();

}  // namespace

const std::string& active_isa() { return g_isa; }

}  // namespace emonoise::kernels
