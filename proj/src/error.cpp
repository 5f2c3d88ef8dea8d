// Copyright 2026 The Authors.
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

#include "qpoly/error.hpp"

namespace qpoly {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAPrimePower: return "NotAPrimePower";
    case ErrorCode::kUnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotFeasible: return "NotFeasible";
    case ErrorCode::kNotADenominator: return "NotADenominator";
    case ErrorCode::kInvalidCollection: return "InvalidCollection";
    case ErrorCode::kCoefficientSum: return "CoefficientSum";
    case ErrorCode::kLatticeMismatch: return "LatticeMismatch";
    case ErrorCode::kOverlap: return "Overlap";
    case ErrorCode::kRankMismatch: return "RankMismatch";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kUnsupportedShape: return "UnsupportedShape";
    case ErrorCode::kHypothesisFail: return "HypothesisFail";
    case ErrorCode::kInvalidCode: return "InvalidCode";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qpoly
