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

#ifndef EMONOISE_KERNELS_H_
#define EMONOISE_KERNELS_H_

#include <cstddef>
#include <string>

// Data-parallel inner loops used by the audio pipeline. Every kernel has a
// scalar reference implementation; on x86 an AVX2 variant and on aarch64 a
// NEON variant are selected at load time. Elementwise kernels (scale,
// scaled_add, ramp_mul, peak_abs) are bit-identical across variants; the
// reductions (sum_squares, dot) accumulate in double and may differ from the
// scalar path only by summation order.
namespace emonoise::kernels {

// Reductions. Accumulate in double regardless of variant.
extern double (*sum_squares)(const float* x, std::size_t n);
extern double (*dot)(const float* a, const float* b, std::size_t n);

// Largest absolute sample value; 0 for empty input.
extern float (*peak_abs)(const float* x, std::size_t n);

// x[i] *= g
extern void (*scale)(float* x, std::size_t n, float g);

// dst[i] += g * src[i]
extern void (*scaled_add)(float* dst, const float* src, std::size_t n, float g);

// x[i] *= (g0 + step * i), clamped below at 0 when clamp_zero is set.
// The clamped form is what fades use; the unclamped form is the St envelope.
extern void (*ramp_mul)(float* x, std::size_t n, float g0, float step,
                        bool clamp_zero);

// Name of the active variant: "scalar", "avx2" or "neon".
const std::string& active_isa();

// Scalar reference implementations, exposed so the equivalence tests can
// compare the dispatched variant against them directly.
namespace ref {
double sum_squares(const float* x, std::size_t n);
double dot(const float* a, const float* b, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void scale(float* x, std::size_t n, float g);
void scaled_add(float* dst, const float* src, std::size_t n, float g);
void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero);
}  // namespace ref

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double sum_squares(const float* x, std::size_t n);
double dot(const float* a, const float* b, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void scale(float* x, std::size_t n, float g);
void scaled_add(float* dst, const float* src, std::size_t n, float g);
void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero);
bool supported();
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double sum_squares(const float* x, std::size_t n);
double dot(const float* a, const float* b, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void scale(float* x, std::size_t n, float g);
void scaled_add(float* dst, const float* src, std::size_t n, float g);
void ramp_mul(float* x, std::size_t n, float g0, float step, bool clamp_zero);
}  // namespace neon
#endif

}  // namespace emonoise::kernels

#endif  // EMONOISE_KERNELS_H_
