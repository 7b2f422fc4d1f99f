// Copyright 2026 The avdist Authors
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

#ifndef AVDIST_ERROR_HPP
#define AVDIST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace avdist {

enum class Errc {
  NonHermitian,
  NonSquare,
  NonFinite,
  NotUnitary,
  DimensionMismatch,
  DimensionTooLarge,
  KTooLarge,
  NotPositive,
  NotNormalized,
  NotTracePreserving,
  ChoiNotCPTP,
  InvalidStochasticMap,
  InvalidProbabilityVector,
  InvalidExampleOperator,
  OutcomeCountMismatch,
  TooManyOutcomes,
  TooManyQubits,
  OutOfValidityRegion,
  DeltaOutOfRange,
  ZeroDistance,
  NotADistribution,
  UnknownCase,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::NonHermitian: return "NonHermitian";
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonFinite: return "NonFinite";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::KTooLarge: return "KTooLarge";
    case Errc::NotPositive: return "NotPositive";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotTracePreserving: return "NotTracePreserving";
    case Errc::ChoiNotCPTP: return "ChoiNotCPTP";
    case Errc::InvalidStochasticMap: return "InvalidStochasticMap";
    case Errc::InvalidProbabilityVector: return "InvalidProbabilityVector";
    case Errc::InvalidExampleOperator: return "InvalidExampleOperator";
    case Errc::OutcomeCountMismatch: return "OutcomeCountMismatch";
    case Errc::TooManyOutcomes: return "TooManyOutcomes";
    case Errc::TooManyQubits: return "TooManyQubits";
    case Errc::OutOfValidityRegion: return "OutOfValidityRegion";
    case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
    case Errc::ZeroDistance: return "ZeroDistance";
    case Errc::NotADistribution: return "NotADistribution";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as an Error carrying
/// a machine-readable code; the message names the violated condition and,
/// where one exists, its numeric magnitude.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace avdist

#endif  // AVDIST_ERROR_HPP
