// Copyright 2026 The HICODE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hicode/error.h"

namespace hicode {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidWeight:
      return "InvalidWeight";
    case ErrorCode::kSelfLoop:
      return "SelfLoop";
    case ErrorCode::kIncompleteLayer:
      return "IncompleteLayer";
    case ErrorCode::kEmptyGraph:
      return "EmptyGraph";
    case ErrorCode::kHeterogeneousWeights:
      return "HeterogeneousWeights";
    case ErrorCode::kZeroWeightGraph:
      return "ZeroWeightGraph";
    case ErrorCode::kDomainMismatch:
      return "DomainMismatch";
    case ErrorCode::kEmptyCommunitySet:
      return "EmptyCommunitySet";
    case ErrorCode::kInvalidParam:
      return "InvalidParam";
    case ErrorCode::kConfigError:
      return "ConfigError";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kUnknownLabel:
      return "UnknownLabel";
  }
  return "Unknown";
}

}  // namespace hicode
