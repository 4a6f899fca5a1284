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
#include "dsbelief/error.hpp"

namespace dsb {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kUnknownAtom: return "unknown_atom";
    case ErrorCode::kFrameMismatch: return "frame_mismatch";
    case ErrorCode::kSizeOverflow: return "size_overflow";
    case ErrorCode::kTotalConflict: return "total_conflict";
    case ErrorCode::kInvalidLabeling: return "invalid_labeling";
    case ErrorCode::kAllDiscarded: return "all_discarded";
    case ErrorCode::kNotABeliefFunction: return "not_a_belief_function";
    case ErrorCode::kUnknownCase: return "unknown_case";
    case ErrorCode::kIo: return "io_error";
  }
  return "unknown";
}

bool IsDomainError(ErrorCode code) {
  return code == ErrorCode::kTotalConflict ||
         code == ErrorCode::kInvalidLabeling ||
         code == ErrorCode::kAllDiscarded;
}

}  // namespace dsb
