/******************************************************************************
 * Copyright 2026 The dsbelief Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/
#pragma once

#include <stdexcept>
#include <string>

namespace dsb {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kUnknownAtom,
  kFrameMismatch,
  kSizeOverflow,
  kTotalConflict,
  kInvalidLabeling,
  kAllDiscarded,
  kNotABeliefFunction,
  kUnknownCase,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Domain errors describe valid input that has no admissible result
// (total conflict, invalid labeling, every draw discarded). Everything else
// is an input error.
bool IsDomainError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dsb
