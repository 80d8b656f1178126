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

#ifndef EMONOISE_DSP_H_
#define EMONOISE_DSP_H_

#include <cstddef>
#include <vector>

#include "emonoise/clip.h"

namespace emonoise {

// Sample-rate conversion with a Hann-windowed sinc interpolator (16 taps per
// side, cutoff at the lower of the two Nyquist frequencies).
AudioClip resample(const AudioClip& clip, int new_rate);

// Fractional-step resampling of the raw buffer: out[j] = x(j * step).
// step > 1 shortens (pitch up when played at the same rate).
std::vector<float> resample_by_step(const std::vector<float>& x, double step);

// Pitch-preserving time stretch (synchronized overlap-add, 30 ms frames,
// 10 ms synthesis hop, +-5 ms correlation search). rate > 1 speeds up:
// output length is round(n / rate). rate == 1 returns the input unchanged.
AudioClip time_stretch(const AudioClip& clip, double rate);

// Pitch scaling by `ratio` (frequency multiplier) with duration preserved to
// within one hop: fractional resample followed by a compensating stretch.
AudioClip pitch_scale(const AudioClip& clip, double ratio);

// Full convolution (length n + m - 1). Direct form for short kernels, a
// single padded FFT otherwise; the identity kernel {1} is exact.
std::vector<float> convolve(const std::vector<float>& x,
                            const std::vector<float>& h);

}  // namespace emonoise

#endif  // EMONOISE_DSP_H_
