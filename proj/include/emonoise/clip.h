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

#ifndef EMONOISE_CLIP_H_
#define EMONOISE_CLIP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace emonoise {

// Mono sample buffer. Samples are float32 in [-1, 1]; every transform in the
// toolkit preserves sample_rate (resampling is always an explicit call).
struct AudioClip {
  std::vector<float> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
  float* data() { return samples.data(); }
  const float* data() const { return samples.data(); }
};

struct LevelMeasure {
  double rms = 0.0;    // linear amplitude
  double power = 0.0;  // mean square, == rms^2
  double db_fs = 0.0;  // 20*log10(rms); -inf for an all-zero signal
};

LevelMeasure measure(const AudioClip& clip);
LevelMeasure measure(std::span<const float> samples);

// Gain to apply to noise so that 20*log10(rms_signal / (g*rms_noise)) equals
// snr_db. rms_noise must be > 0.
double snr_gain(double rms_signal, double rms_noise, double snr_db);

// If the peak exceeds 1.0, rescales the whole buffer by 1/peak. Global
// rescaling keeps the output free of clipping distortion and leaves all
// power ratios (and therefore SNR) intact. Returns the factor applied
// (1.0 when nothing was done).
double normalize_peak(AudioClip& clip);

// Adds `noise` to `signal` starting at sample `offset`, gain-matched so the
// SNR over the overlap region is snr_db. Noise that extends past the end of
// the signal is truncated; the output always has the signal's length. The
// optional envelope (same length as the overlap) shapes the noise after gain
// matching, so the stated SNR holds exactly only when it is absent.
//
// Errors: sample-rate mismatch, empty inputs, offset outside the signal, and
// noise that is silent over the overlap region.
AudioClip mix_at_snr(const AudioClip& signal, const AudioClip& noise,
                     double snr_db, std::size_t offset = 0,
                     std::span<const float> envelope = {});

// Measured SNR of a known decomposition: 10*log10(sum(s^2)/sum(n^2)) over a
// region. Test oracles use this on (clean, output-minus-clean) pairs.
double measured_snr_db(std::span<const float> signal_part,
                       std::span<const float> noise_part);

// Returns exactly target_len samples: a prefix when the source is long
// enough, otherwise the source looped with a 10 ms equal-power crossfade at
// every seam.
AudioClip loop_or_truncate(const AudioClip& noise, std::size_t target_len);

}  // namespace emonoise

#endif  // EMONOISE_CLIP_H_
