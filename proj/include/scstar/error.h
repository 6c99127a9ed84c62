// Copyright 2026 The scstar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scstar {

enum class ErrorCode {
  kSyntax,
  kDuplicateName,
  kUnknownReference,
  kUnknownFeature,
  kTooLarge,
  kOptionalCompose,
  kNotSimple,
  kNotOptional,
  kIsInitial,
  kNotSubstate,
  kNotAnd,
  kNoInitial,
  kEmptyComposite,
  kInvalidInput,
  kStepLimit,
};

// Stable identifier such as "E_NO_INITIAL".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the parsers. Line and column are 1-based; zero when the
// problem is structural rather than lexical.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A broken invariant reported by one of the validators. Validators never
// throw; they return every violation they find.
struct Violation {
  std::string code;     // e.g. "FM_TREE", "CONF_ALT", "E_UNKNOWN_FEATURE"
  std::string element;  // offending feature, state or transition name
  std::string message;

  bool operator==(const Violation&) const = default;
};

using Violations = std::vector<Violation>;

std::string to_string(const Violation& v);

}  // namespace scstar
