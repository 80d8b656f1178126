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

#ifndef EMONOISE_WAV_H_
#define EMONOISE_WAV_H_

#include <filesystem>
#include <string>
#include <vector>

#include "emonoise/clip.h"

namespace emonoise {

enum class WavEncoding { kPcm16, kFloat32 };

// Reads a RIFF WAV file. PCM16 and IEEE float32 only; anything else raises
// FormatError. Multichannel input is averaged to mono.
AudioClip read_wav(const std::filesystem::path& path);

// Writes a mono WAV file. PCM16 quantizes with round-to-nearest at 1/32768
// full scale; float32 is lossless.
void write_wav(const AudioClip& clip, const std::filesystem::path& path,
               WavEncoding encoding = WavEncoding::kPcm16);

// In-memory encode, used by the HTTP classifier transport.
std::vector<unsigned char> encode_wav(const AudioClip& clip,
                                      WavEncoding encoding = WavEncoding::kPcm16);
AudioClip decode_wav(const unsigned char* data, std::size_t size);

}  // namespace emonoise

#endif  // EMONOISE_WAV_H_
