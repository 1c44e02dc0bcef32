// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qunc/errors.hpp"

namespace qunc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeSpectrum: return "NegativeSpectrum";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::InvalidS: return "InvalidS";
    case ErrorKind::MaximallyMixedState: return "MaximallyMixedState";
    case ErrorKind::ScalarObservable: return "ScalarObservable";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace qunc
