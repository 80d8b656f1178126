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

#ifndef EMONOISE_ALIGNMENT_H_
#define EMONOISE_ALIGNMENT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace emonoise {

struct WordInterval {
  std::string token;
  double start_s = 0.0;
  double end_s = 0.0;
};

struct PhoneInterval {
  std::string phone;  // ARPAbet label, stress digits allowed
  double start_s = 0.0;
  double end_s = 0.0;
  int word_index = -1;  // index into words
};

// Word (and optionally phone) timing for one utterance. Produced by an
// external aligner; this toolkit only consumes and re-times it.
struct Alignment {
  std::vector<WordInterval> words;
  std::vector<PhoneInterval> phones;

  bool has_phones() const { return !phones.empty(); }

  // Checks the interval invariants: nondecreasing, non-overlapping, within
  // [0, duration], phones nested inside their parent word. Throws on
  // violation with the offending index in the message.
  void validate(double duration_s) const;
};

// JSON schema: {"words":[{"w":..,"start":..,"end":..}],
//               "phones":[{"p":..,"start":..,"end":..,"word":..}]}
Alignment load_alignment(const std::filesystem::path& path);
void save_alignment(const Alignment& a, const std::filesystem::path& path);
Alignment alignment_from_json_text(const std::string& text);
std::string alignment_to_json_text(const Alignment& a);

// A contiguous region to excise, in samples.
struct CutInterval {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive
};

// Rewrites times after the given disjoint, sorted cuts are removed from the
// timeline. Intervals fully inside a cut disappear; partial overlaps are
// clipped to the surviving material.
Alignment remap_after_cuts(const Alignment& a,
                           const std::vector<CutInterval>& cuts,
                           int sample_rate);

// Shifts every interval starting at or after `at_s` forward by `shift_s`
// (insertion re-timing).
Alignment shift_after(const Alignment& a, double at_s, double shift_s);

}  // namespace emonoise

#endif  // EMONOISE_ALIGNMENT_H_
