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

#include "emonoise/env_aug.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "emonoise/dsp.h"
#include "emonoise/errors.h"
#include "emonoise/kernels.h"
#include "emonoise/rng.h"
#include "emonoise/wav.h"

namespace emonoise {

namespace {
using nlohmann::json;

constexpr double kBankTargetDbfs = -20.0;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::string to_string(NoiseCategory c) {
  switch (c) {
    case NoiseCategory::kNat: return "Nat";
    case NoiseCategory::kHum: return "Hum";
    case NoiseCategory::kInt: return "Int";
    case NoiseCategory::kOther: return "Other";
  }
  return "Other";
}

NoiseCategory noise_category_from_string(const std::string& s) {
  const std::string l = lower(s);
  if (l == "nat") return NoiseCategory::kNat;
  if (l == "hum") return NoiseCategory::kHum;
  if (l == "int") return NoiseCategory::kInt;
  if (l == "other") return NoiseCategory::kOther;
  throw ConfigError("unknown noise category: " + s);
}

std::string to_string(EnvPosition p) {
  return p == EnvPosition::kSt ? "St" : "Co";
}

std::string to_string(EnvLength l) {
  switch (l) {
    case EnvLength::kSh: return "Sh";
    case EnvLength::kMe: return "Me";
    case EnvLength::kCo: return "Co";
  }
  return "Co";
}

EnvPosition env_position_from_string(const std::string& s) {
  const std::string l = lower(s);
  if (l == "st") return EnvPosition::kSt;
  if (l == "co") return EnvPosition::kCo;
  throw ConfigError("unknown env position: " + s);
}

EnvLength env_length_from_string(const std::string& s) {
  const std::string l = lower(s);
  if (l == "sh") return EnvLength::kSh;
  if (l == "me") return EnvLength::kMe;
  if (l == "co") return EnvLength::kCo;
  throw ConfigError("unknown env length: " + s);
}

std::vector<const NoiseBankEntry*> NoiseBank::by_category(
    NoiseCategory c) const {
  std::vector<const NoiseBankEntry*> out;
  for (const auto& e : entries) {
    if (e.category == c) out.push_back(&e);
  }
  return out;
}

bool NoiseBank::has_category(NoiseCategory c) const {
  return std::any_of(entries.begin(), entries.end(),
                     [c](const NoiseBankEntry& e) { return e.category == c; });
}

std::map<std::string, std::string> load_category_map(
    const std::filesystem::path& json_path) {
  std::ifstream in(json_path);
  if (!in) throw ConfigError("cannot open category map: " + json_path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("category map " + json_path.string() + ": " + e.what());
  }
  if (!j.is_object()) {
    throw FormatError("category map must be a JSON object of label -> category");
  }
  std::map<std::string, std::string> m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    m[it.key()] = it.value().get<std::string>();
  }
  return m;
}

NoiseBank ingest_noise_bank(
    const std::filesystem::path& dir,
    const std::map<std::string, std::string>& category_map, int sample_rate) {
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError("noise bank directory not found: " + dir.string());
  }
  NoiseBank bank;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && lower(entry.path().extension().string()) == ".wav") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  for (const auto& file : files) {
    const std::string label = file.parent_path() == dir
                                  ? file.stem().string()
                                  : file.parent_path().filename().string();
    auto it = category_map.find(label);
    if (it == category_map.end()) {
      bank.report.skipped++;
      bank.report.warnings.push_back("unmapped label '" + label +
                                     "', skipping " + file.string());
      continue;
    }
    NoiseBankEntry e;
    e.category = noise_category_from_string(it->second);
    e.source_label = label;
    e.clip_id = file.lexically_relative(dir).generic_string();
    e.clip = read_wav(file);
    if (e.clip.sample_rate != sample_rate) {
      e.clip = resample(e.clip, sample_rate);
    }
    const double rms = measure(e.clip).rms;
    if (rms <= 0.0) {
      bank.report.skipped++;
      bank.report.warnings.push_back("silent clip, skipping " + file.string());
      continue;
    }
    const double target = std::pow(10.0, kBankTargetDbfs / 20.0);
    kernels::scale(e.clip.data(), e.clip.size(),
                   static_cast<float>(target / rms));
    bank.entries.push_back(std::move(e));
    bank.report.loaded++;
  }
  return bank;
}

std::string EnvSpec::tag() const {
  std::string s = lower(to_string(category)) + "_" + lower(to_string(position));
  s += "_" + (snr_db ? std::to_string(*snr_db) : std::string("na"));
  s += "_" + (length ? lower(to_string(*length)) : std::string("na"));
  return s;
}

AudioClip apply_env(const AudioClip& clip, const EnvSpec& spec,
                    const NoiseBank& bank) {
  if (clip.empty() || clip.sample_rate <= 0) {
    throw Error("apply_env: invalid clip");
  }
  if (clip.duration_s() < 0.1) {
    throw Error("apply_env: clip shorter than 100 ms, too short to place noise");
  }
  auto candidates = bank.by_category(spec.category);
  if (candidates.empty()) {
    throw Error("apply_env: noise bank has no entries in category " +
                to_string(spec.category));
  }
  if (spec.position == EnvPosition::kCo && !spec.snr_db) {
    throw ConfigError("apply_env: Co placement requires snr_db");
  }

  Rng rng(spec.seed);
  const NoiseBankEntry& entry =
      *candidates[rng.next_below(candidates.size())];
  const std::size_t n = clip.size();
  const int sr = clip.sample_rate;

  if (spec.position == EnvPosition::kSt) {
    // Noise enters at full level and fades linearly to zero at the
    // midpoint; the second half carries no noise at all.
    const std::size_t support = (n + 1) / 2;
    AudioClip noise = loop_or_truncate(entry.clip, support);
    std::vector<float> env(support);
    const float step = -2.0f / static_cast<float>(n);
    for (std::size_t i = 0; i < support; ++i) {
      const float g = 1.0f + step * static_cast<float>(i);
      env[i] = g > 0.0f ? g : 0.0f;
    }
    return mix_at_snr(clip, noise, kStOnsetSnrDb, 0, env);
  }

  const EnvLength length = spec.length.value_or(EnvLength::kCo);
  std::size_t noise_len = n;
  std::size_t offset = 0;
  switch (length) {
    case EnvLength::kCo:
      break;
    case EnvLength::kMe:
      noise_len = n / 2;
      offset = n / 4;
      break;
    case EnvLength::kSh: {
      noise_len = std::min<std::size_t>(static_cast<std::size_t>(sr),
                                        std::max<std::size_t>(1, n / 10));
      offset = static_cast<std::size_t>(rng.next_below(n - noise_len + 1));
      break;
    }
  }
  AudioClip noise = loop_or_truncate(entry.clip, noise_len);
  return mix_at_snr(clip, noise, static_cast<double>(*spec.snr_db), offset);
}

std::vector<EnvSpec> enumerate_env_grid(const std::string& clip_id,
                                        std::uint64_t master_seed) {
  const Rng base = Rng(master_seed).fork(clip_id);
  std::vector<EnvSpec> grid;
  int variant = 0;
  for (NoiseCategory cat :
       {NoiseCategory::kNat, NoiseCategory::kHum, NoiseCategory::kInt}) {
    EnvSpec st;
    st.category = cat;
    st.position = EnvPosition::kSt;
    st.seed = base.fork(static_cast<std::uint64_t>(variant++)).seed();
    grid.push_back(st);
    for (int snr : {20, 10, 0}) {
      EnvSpec co;
      co.category = cat;
      co.position = EnvPosition::kCo;
      co.snr_db = snr;
      co.length = EnvLength::kCo;
      co.seed = base.fork(static_cast<std::uint64_t>(variant++)).seed();
      grid.push_back(co);
    }
  }
  return grid;
}

std::vector<EnvSpec> enumerate_env_grid_extended(const std::string& clip_id,
                                                 std::uint64_t master_seed) {
  const Rng base = Rng(master_seed).fork(clip_id);
  std::vector<EnvSpec> grid;
  int variant = 100;  // disjoint from the standard grid's seed tags
  for (NoiseCategory cat :
       {NoiseCategory::kNat, NoiseCategory::kHum, NoiseCategory::kInt}) {
    for (EnvLength len : {EnvLength::kSh, EnvLength::kMe}) {
      for (int snr : {20, 10, 0}) {
        EnvSpec co;
        co.category = cat;
        co.position = EnvPosition::kCo;
        co.snr_db = snr;
        co.length = len;
        co.seed = base.fork(static_cast<std::uint64_t>(variant++)).seed();
        grid.push_back(co);
      }
    }
  }
  return grid;
}

}  // namespace emonoise
