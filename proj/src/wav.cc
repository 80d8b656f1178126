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

#include "emonoise/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "emonoise/errors.h"

namespace emonoise {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xfffe;

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

}  // namespace

AudioClip decode_wav(const unsigned char* data, std::size_t size) {
  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 ||
      std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw FormatError("not a RIFF/WAVE file");
  }

  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
  bool have_fmt = false;
  const unsigned char* frames = nullptr;
  std::size_t data_bytes = 0;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* hdr = data + pos;
    std::uint32_t chunk_size = read_u32(hdr + 4);
    const unsigned char* body = hdr + 8;
    if (pos + 8 + chunk_size > size) {
      // Tolerate a truncated final chunk length but never read past the end.
      chunk_size = static_cast<std::uint32_t>(size - pos - 8);
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError("fmt chunk too small");
      format = read_u16(body);
      channels = read_u16(body + 2);
      sample_rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      if (format == kFormatExtensible && chunk_size >= 40) {
        // SubFormat GUID starts with the effective format tag.
        format = read_u16(body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      frames = body;
      data_bytes = chunk_size;
    }
    pos += 8 + chunk_size + (chunk_size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || frames == nullptr) {
    throw FormatError("missing fmt or data chunk");
  }
  if (channels == 0 || sample_rate == 0) {
    throw FormatError("invalid fmt chunk (zero channels or sample rate)");
  }
  const bool pcm16 = format == kFormatPcm && bits == 16;
  const bool f32 = format == kFormatIeeeFloat && bits == 32;
  if (!pcm16 && !f32) {
    throw FormatError("unsupported WAV encoding (format tag " +
                      std::to_string(format) + ", " + std::to_string(bits) +
                      " bits); expected PCM16 or IEEE float32");
  }

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * channels;
  const std::size_t n_frames = data_bytes / frame_bytes;

  AudioClip clip;
  clip.sample_rate = static_cast<int>(sample_rate);
  clip.samples.resize(n_frames);
  const double inv_channels = channels > 0 ? 1.0 / channels : 0.0;
  for (std::size_t i = 0; i < n_frames; ++i) {
    double acc = 0.0;
    const unsigned char* f = frames + i * frame_bytes;
    for (std::uint16_t c = 0; c < channels; ++c) {
      if (pcm16) {
        std::int16_t s = static_cast<std::int16_t>(
            read_u16(f + c * bytes_per_sample));
        acc += s / 32768.0;
      } else {
        float v;
        std::memcpy(&v, f + c * bytes_per_sample, 4);
        acc += v;
      }
    }
    clip.samples[i] = static_cast<float>(acc * inv_channels);
  }
  return clip;
}

AudioClip read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open WAV file: " + path.string());
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  try {
    return decode_wav(bytes.data(), bytes.size());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<unsigned char> encode_wav(const AudioClip& clip,
                                      WavEncoding encoding) {
  if (clip.empty()) {
    throw Error("write_wav: refusing to write a clip with no samples");
  }
  if (clip.sample_rate <= 0) {
    throw Error("write_wav: sample rate must be positive");
  }
  const bool pcm16 = encoding == WavEncoding::kPcm16;
  const std::uint32_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(clip.size() * bytes_per_sample);

  std::vector<unsigned char> out;
  out.reserve(44 + data_bytes);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_bytes);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, pcm16 ? kFormatPcm : kFormatIeeeFloat);
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(clip.sample_rate) * bytes_per_sample);
  put_u16(out, static_cast<std::uint16_t>(bytes_per_sample));
  put_u16(out, static_cast<std::uint16_t>(bytes_per_sample * 8));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_bytes);

  if (pcm16) {
    for (float x : clip.samples) {
      // Quantize at 1/32768 full scale; the round trip error stays within
      // one LSB even at +1.0, which clamps to 32767.
      long q = std::lround(static_cast<double>(x) * 32768.0);
      q = std::clamp(q, -32768L, 32767L);
      put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
  } else {
    for (float x : clip.samples) {
      unsigned char b[4];
      std::memcpy(b, &x, 4);
      out.insert(out.end(), b, b + 4);
    }
  }
  return out;
}

void write_wav(const AudioClip& clip, const std::filesystem::path& path,
               WavEncoding encoding) {
  std::vector<unsigned char> bytes = encode_wav(clip, encoding);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open for writing: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error("short write: " + path.string());
  }
}

}  // namespace emonoise
