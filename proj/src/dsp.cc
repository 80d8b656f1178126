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

#include "emonoise/dsp.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "emonoise/errors.h"
#include "emonoise/fft.h"
#include "emonoise/kernels.h"

namespace emonoise {

namespace {

constexpr int kSincHalfTaps = 16;

double windowed_sinc(double t, double cutoff) {
  // Hann-windowed sinc, window half-width kSincHalfTaps samples.
  const double at = std::fabs(t);
  if (at >= kSincHalfTaps) return 0.0;
  double s;
  if (at < 1e-12) {
    s = cutoff;
  } else {
    s = std::sin(std::numbers::pi * cutoff * t) / (std::numbers::pi * t);
  }
  const double w =
      0.5 * (1.0 + std::cos(std::numbers::pi * at / kSincHalfTaps));
  return s * w;
}

// Interpolate x at fractional position p.
float sinc_interp(const std::vector<float>& x, double p, double cutoff) {
  const long n = static_cast<long>(x.size());
  const long center = static_cast<long>(std::floor(p));
  double acc = 0.0;
  for (long k = center - kSincHalfTaps + 1; k <= center + kSincHalfTaps; ++k) {
    if (k < 0 || k >= n) continue;  // zero outside the clip
    acc += static_cast<double>(x[static_cast<std::size_t>(k)]) *
           windowed_sinc(p - static_cast<double>(k), cutoff);
  }
  return static_cast<float>(acc);
}

}  // namespace

std::vector<float> resample_by_step(const std::vector<float>& x, double step) {
  if (x.empty() || step <= 0.0) {
    throw Error("resample_by_step: empty input or non-positive step");
  }
  // Downsampling (step > 1) needs the cutoff below the output Nyquist.
  const double cutoff = step > 1.0 ? 0.95 / step : 0.95;
  const std::size_t out_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::floor(static_cast<double>(x.size()) / step)));
  std::vector<float> out(out_len);
  for (std::size_t j = 0; j < out_len; ++j) {
    out[j] = sinc_interp(x, static_cast<double>(j) * step, cutoff);
  }
  return out;
}

AudioClip resample(const AudioClip& clip, int new_rate) {
  if (new_rate <= 0) throw Error("resample: target rate must be positive");
  if (clip.empty()) throw Error("resample: empty clip");
  if (new_rate == clip.sample_rate) return clip;
  AudioClip out;
  out.sample_rate = new_rate;
  out.samples = resample_by_step(
      clip.samples, static_cast<double>(clip.sample_rate) / new_rate);
  return out;
}

AudioClip time_stretch(const AudioClip& clip, double rate) {
  if (rate <= 0.0) throw Error("time_stretch: rate must be positive");
  if (rate == 1.0 || clip.size() < 2) return clip;

  const std::size_t n = clip.size();
  const int sr = clip.sample_rate;
  const std::size_t win = static_cast<std::size_t>(sr * 30 / 1000);   // 30 ms
  const std::size_t hop = static_cast<std::size_t>(sr * 10 / 1000);   // 10 ms
  const std::size_t search = static_cast<std::size_t>(sr * 5 / 1000); //  5 ms
  const std::size_t target =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                   static_cast<double>(n) / rate)));

  if (n < win + hop) {
    // Too short for overlap-add frames; plain resample (the pitch moves, but
    // inputs this short are below one analysis window anyway).
    AudioClip out;
    out.sample_rate = sr;
    out.samples = resample_by_step(
        clip.samples, static_cast<double>(n) / static_cast<double>(target));
    out.samples.resize(target, 0.0f);
    return out;
  }

  const double analysis_hop = rate * static_cast<double>(hop);
  const float* x = clip.data();

  std::vector<float> y;
  y.resize(target + win, 0.0f);
  std::copy(x, x + win, y.begin());

  std::size_t prev_pos = 0;  // start of the most recently placed frame
  std::size_t m = 1;
  while (prev_pos + win < target) {
    const std::size_t a = std::min(
        static_cast<std::size_t>(std::llround(
            static_cast<double>(m) * analysis_hop)),
        n - win);
    const std::size_t p_nom = m * hop;

    // Synchronize: shift the synthesis position within +-search samples to
    // maximize normalized cross-correlation over the overlap with what is
    // already written.
    const std::size_t lo =
        std::max(prev_pos + 1, p_nom > search ? p_nom - search : 1);
    const std::size_t hi = std::min(p_nom + search, prev_pos + win - 1);
    std::size_t best_p = std::min(std::max(p_nom, lo), hi);
    double best_score = -2.0;
    for (std::size_t p = lo; p <= hi; ++p) {
      const std::size_t ov = prev_pos + win - p;
      const double num = kernels::dot(y.data() + p, x + a, ov);
      const double den = std::sqrt(kernels::sum_squares(y.data() + p, ov) *
                                   kernels::sum_squares(x + a, ov));
      const double score = den > 0.0 ? num / den : 0.0;
      if (score > best_score + 1e-12) {
        best_score = score;
        best_p = p;
      }
    }

    const std::size_t p = best_p;
    const std::size_t ov = prev_pos + win - p;
    // Linear crossfade over the overlap, then copy the rest of the frame.
    for (std::size_t i = 0; i < ov; ++i) {
      const float w = static_cast<float>(i + 1) / static_cast<float>(ov + 1);
      y[p + i] = y[p + i] * (1.0f - w) + x[a + i] * w;
    }
    std::copy(x + a + ov, x + a + win, y.begin() + static_cast<long>(p + ov));
    prev_pos = p;
    ++m;
  }

  y.resize(target);
  AudioClip out;
  out.sample_rate = sr;
  out.samples = std::move(y);
  return out;
}

AudioClip pitch_scale(const AudioClip& clip, double ratio) {
  if (ratio <= 0.0) throw Error("pitch_scale: ratio must be positive");
  if (ratio == 1.0) return clip;
  AudioClip shifted;
  shifted.sample_rate = clip.sample_rate;
  shifted.samples = resample_by_step(clip.samples, ratio);
  // Restore the original duration; the stretch target is the original
  // sample count expressed as a rate.
  const double back_rate = static_cast<double>(shifted.samples.size()) /
                           static_cast<double>(clip.size());
  return time_stretch(shifted, back_rate);
}

std::vector<float> convolve(const std::vector<float>& x,
                            const std::vector<float>& h) {
  if (x.empty() || h.empty()) throw Error("convolve: empty input");
  const std::size_t out_len = x.size() + h.size() - 1;

  // Direct form while the tap count stays cheap; one padded FFT beyond that.
  if (h.size() <= 128) {
    std::vector<float> y(out_len, 0.0f);
    for (std::size_t t = 0; t < h.size(); ++t) {
      kernels::scaled_add(y.data() + t, x.data(), x.size(), h[t]);
    }
    return y;
  }

  const std::size_t nfft = next_pow2(out_len);
  std::vector<std::complex<double>> fx(nfft, {0.0, 0.0});
  std::vector<std::complex<double>> fh(nfft, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) fx[i] = x[i];
  for (std::size_t i = 0; i < h.size(); ++i) fh[i] = h[i];
  fft_inplace(fx, false);
  fft_inplace(fh, false);
  for (std::size_t i = 0; i < nfft; ++i) fx[i] *= fh[i];
  fft_inplace(fx, true);
  std::vector<float> y(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    y[i] = static_cast<float>(fx[i].real());
  }
  return y;
}

}  // namespace emonoise
