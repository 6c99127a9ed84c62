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

#include "scstar/error.h"

namespace scstar {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "E_SYNTAX";
    case ErrorCode::kDuplicateName: return "E_DUPLICATE_NAME";
    case ErrorCode::kUnknownReference: return "E_UNKNOWN_REFERENCE";
    case ErrorCode::kUnknownFeature: return "E_UNKNOWN_FEATURE";
    case ErrorCode::kTooLarge: return "E_TOO_LARGE";
    case ErrorCode::kOptionalCompose: return "E_OPTIONAL_COMPOSE";
    case ErrorCode::kNotSimple: return "E_NOT_SIMPLE";
    case ErrorCode::kNotOptional: return "E_NOT_OPTIONAL";
    case ErrorCode::kIsInitial: return "E_IS_INITIAL";
    case ErrorCode::kNotSubstate: return "E_NOT_SUBSTATE";
    case ErrorCode::kNotAnd: return "E_NOT_AND";
    case ErrorCode::kNoInitial: return "E_NO_INITIAL";
    case ErrorCode::kEmptyComposite: return "E_EMPTY_COMPOSITE";
    case ErrorCode::kInvalidInput: return "E_INVALID_INPUT";
    case ErrorCode::kStepLimit: return "E_STEP_LIMIT";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

SyntaxError::SyntaxError(const std::string& message, std::size_t line,
                         std::size_t column)
    : Error(ErrorCode::kSyntax,
            line == 0 ? message
                      : std::to_string(line) + ":" + std::to_string(column) +
                            ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(const Violation& v) {
  std::string out = v.code;
  if (!v.element.empty()) out += " [" + v.element + "]";
  out += ": " + v.message;
  return out;
}

}  // namespace scstar
