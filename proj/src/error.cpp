// Copyright 2026 The qmagic Authors
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

#include "qmagic/error.hpp"

namespace qmagic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NonHermitianExpectation: return "NonHermitianExpectation";
    case ErrorKind::AlphaOne: return "AlphaOne";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidDims: return "InvalidDims";
    case ErrorKind::InvalidAngle: return "InvalidAngle";
    case ErrorKind::ForwardBackwardSingularity: return "ForwardBackwardSingularity";
    case ErrorKind::UnphysicalBloch: return "UnphysicalBloch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnitError: return "UnitError";
    case ErrorKind::NonMonotonic: return "NonMonotonic";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qmagic
