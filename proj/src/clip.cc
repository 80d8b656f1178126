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

#include "emonoise/clip.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "emonoise/errors.h"
#include "emonoise/kernels.h"

namespace emonoise {

LevelMeasure measure(std::span<const float> samples) {
  LevelMeasure m;
  if (samples.empty()) {
    m.db_fs = -std::numeric_limits<double>::infinity();
    return m;
  }
  double ss = kernels::sum_squares(samples.data(), samples.size());
  m.power = ss / static_cast<double>(samples.size());
  m.rms = std::sqrt(m.power);
  m.db_fs = m.rms > 0.0 ? 20.0 * std::log10(m.rms)
                        : -std::numeric_limits<double>::infinity();
  return m;
}

LevelMeasure measure(const AudioClip& clip) {
  return measure(std::span<const float>(clip.samples));
}

double snr_gain(double rms_signal, double rms_noise, double snr_db) {
  if (rms_noise <= 0.0) {
    throw Error("snr_gain: noise RMS must be positive");
  }
  return (rms_signal / rms_noise) * std::pow(10.0, -snr_db / 20.0);
}

double normalize_peak(AudioClip& clip) {
  float peak = kernels::peak_abs(clip.data(), clip.size());
  if (peak <= 1.0f) return 1.0;
  float inv = 1.0f / peak;
  kernels::scale(clip.data(), clip.size(), inv);
  return static_cast<double>(inv);
}

AudioClip mix_at_snr(const AudioClip& signal, const AudioClip& noise,
                     double snr_db, std::size_t offset,
                     std::span<const float> envelope) {
  if (signal.empty() || noise.empty()) {
    throw Error("mix_at_snr: empty signal or noise");
  }
  if (signal.sample_rate != noise.sample_rate) {
    throw Error("mix_at_snr: sample-rate mismatch (" +
                std::to_string(signal.sample_rate) + " vs " +
                std::to_string(noise.sample_rate) + ")");
  }
  if (offset >= signal.size()) {
    throw Error("mix_at_snr: offset past end of signal");
  }
  const std::size_t overlap = std::min(noise.size(), signal.size() - offset);
  if (!envelope.empty() && envelope.size() != overlap) {
    throw Error("mix_at_snr: envelope length must equal the overlap region");
  }

  const double rms_sig =
      measure(std::span<const float>(signal.data() + offset, overlap)).rms;
  const double rms_noise =
      measure(std::span<const float>(noise.data(), overlap)).rms;
  if (rms_noise <= 0.0) {
    throw Error("mix_at_snr: noise is silent over the overlap region");
  }
  const float g = static_cast<float>(snr_gain(rms_sig, rms_noise, snr_db));

  AudioClip out = signal;
  if (envelope.empty()) {
    kernels::scaled_add(out.data() + offset, noise.data(), overlap, g);
  } else {
    std::vector<float> shaped(noise.samples.begin(),
                              noise.samples.begin() + overlap);
    for (std::size_t i = 0; i < overlap; ++i) shaped[i] *= envelope[i];
    kernels::scaled_add(out.data() + offset, shaped.data(), overlap, g);
  }
  normalize_peak(out);
  return out;
}

double measured_snr_db(std::span<const float> signal_part,
                       std::span<const float> noise_part) {
  double ps = kernels::sum_squares(signal_part.data(), signal_part.size());
  double pn = kernels::sum_squares(noise_part.data(), noise_part.size());
  if (pn <= 0.0) return std::numeric_limits<double>::infinity();
  if (ps <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(ps / pn);
}

AudioClip loop_or_truncate(const AudioClip& noise, std::size_t target_len) {
  if (noise.empty()) {
    throw Error("loop_or_truncate: empty noise clip");
  }
  AudioClip out;
  out.sample_rate = noise.sample_rate;
  if (target_len <= noise.size()) {
    out.samples.assign(noise.samples.begin(),
                       noise.samples.begin() + target_len);
    return out;
  }

  const std::size_t n = noise.size();
  // Crossfade length: 10 ms, but never more than half the source.
  std::size_t fade = static_cast<std::size_t>(noise.sample_rate / 100);
  fade = std::min(fade, n / 2);
  out.samples = noise.samples;
  out.samples.reserve(target_len + n);
  while (out.samples.size() < target_len) {
    const std::size_t seam = out.samples.size() - fade;
    // Equal-power blend of the existing tail with the head of the next copy.
    for (std::size_t i = 0; i < fade; ++i) {
      const double theta = (std::numbers::pi / 2.0) *
                           (static_cast<double>(i) + 1.0) /
                           (static_cast<double>(fade) + 1.0);
      out.samples[seam + i] =
          out.samples[seam + i] * static_cast<float>(std::cos(theta)) +
          noise.samples[i] * static_cast<float>(std::sin(theta));
    }
    out.samples.insert(out.samples.end(), noise.samples.begin() + fade,
                       noise.samples.end());
  }
  out.samples.resize(target_len);
  return out;
}

}  // namespace emonoise
