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

#ifndef EMONOISE_ENV_AUG_H_
#define EMONOISE_ENV_AUG_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emonoise/clip.h"

namespace emonoise {

// Additive background-noise source categories. Nat: natural soundscapes
// (rain, wind). Hum: human non-speech (coughs, sneezes). Int: interior and
// domestic sounds (door creaks, clock ticks). Other holds anything mapped
// outside the three standard categories.
enum class NoiseCategory { kNat, kHum, kInt, kOther };

std::string to_string(NoiseCategory c);
NoiseCategory noise_category_from_string(const std::string& s);

// Noise placement: St starts at the beginning of the utterance and fades
// out, Co runs as a continuous background.
enum class EnvPosition { kSt, kCo };

// Co-position noise extent: short blip, medium (half the utterance,
// centered), or the complete utterance.
enum class EnvLength { kSh, kMe, kCo };

std::string to_string(EnvPosition p);
std::string to_string(EnvLength l);
EnvPosition env_position_from_string(const std::string& s);
EnvLength env_length_from_string(const std::string& s);

struct NoiseBankEntry {
  std::string clip_id;
  NoiseCategory category = NoiseCategory::kOther;
  AudioClip clip;
  std::string source_label;
};

struct IngestReport {
  int loaded = 0;
  int skipped = 0;
  std::vector<std::string> warnings;
};

// Immutable after ingestion; shareable across workers.
struct NoiseBank {
  std::vector<NoiseBankEntry> entries;
  IngestReport report;

  std::vector<const NoiseBankEntry*> by_category(NoiseCategory c) const;
  bool has_category(NoiseCategory c) const;
};

// Loads every WAV under `dir`. The label of a file is its parent
// subdirectory name when nested one level, otherwise its stem; labels map to
// categories through `category_map` (unmapped labels are skipped with a
// warning in the report). Entries are resampled to sample_rate and
// RMS-normalized to -20 dBFS so the SNR arithmetic downstream never depends
// on source recording levels.
NoiseBank ingest_noise_bank(const std::filesystem::path& dir,
                            const std::map<std::string, std::string>& category_map,
                            int sample_rate);

// Loads the category map from a JSON object {label: "Nat"|"Hum"|"Int"}.
std::map<std::string, std::string> load_category_map(
    const std::filesystem::path& json_path);

// One environmental augmentation: category plus the placement grid.
// snr_db applies to Co placements only (St always mixes at a fixed 10 dB
// onset and fades linearly to zero by the utterance midpoint, so it has no
// SNR or length axis). The seed fully determines bank-clip choice and
// placement.
struct EnvSpec {
  NoiseCategory category = NoiseCategory::kNat;
  EnvPosition position = EnvPosition::kCo;
  std::optional<int> snr_db;        // required iff position == Co
  std::optional<EnvLength> length;  // used iff position == Co
  std::uint64_t seed = 0;

  // `<cat>_<pos>_<snr|na>_<len|na>`, the tag used in output filenames.
  std::string tag() const;
};

// Onset SNR for St placements: the middle of the {20, 10, 0} grid.
constexpr int kStOnsetSnrDb = 10;

AudioClip apply_env(const AudioClip& clip, const EnvSpec& spec,
                    const NoiseBank& bank);

// The 12-variant evaluation grid: each category crossed with
// {St, Co@20dB, Co@10dB, Co@0dB}. Seeds derive from (clip_id, master_seed).
std::vector<EnvSpec> enumerate_env_grid(const std::string& clip_id,
                                        std::uint64_t master_seed);

// Extended grid rows (Co position at Sh/Me lengths); generated on request
// and labeled as extensions in reports because the published evaluation
// grid covers only St and full-length Co.
std::vector<EnvSpec> enumerate_env_grid_extended(const std::string& clip_id,
                                                 std::uint64_t master_seed);

}  // namespace emonoise

#endif  // EMONOISE_ENV_AUG_H_
