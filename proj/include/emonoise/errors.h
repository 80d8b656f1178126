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

#ifndef EMONOISE_ERRORS_H_
#define EMONOISE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace emonoise {

// Base for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable or unsupported file contents (WAV encodings, malformed JSON).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Invalid configuration; the CLI maps this to exit code 4.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Remote classifier transport failure (timeout, broken pipe, bad response).
// Distinguished from classification output because the attack logs these in
// the trace while still charging the query budget.
class TransportError : public Error {
 public:
  explicit TransportError(const std::string& msg) : Error(msg) {}
};

}  // namespace emonoise

#endif  // EMONOISE_ERRORS_H_
