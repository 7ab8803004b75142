// Copyright 2026 The srenhance Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace sre {

/// Coarse failure category, used by the CLI to pick an exit code.
enum class ErrorKind {
  missing_input,      // a referenced file does not exist
  invalid_parameter,  // a configuration or argument violates its invariants
  signal_contract,    // the audio content violates an operation precondition
  other,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SRE_DEFINE_ERROR(NAME, KIND)                   \
  class NAME : public Error {                          \
   public:                                             \
    explicit NAME(const std::string& what)             \
        : Error(ErrorKind::KIND, what) {}              \
  }

// audio-io
SRE_DEFINE_ERROR(NotFoundError, missing_input);
SRE_DEFINE_ERROR(UnsupportedFormatError, other);
SRE_DEFINE_ERROR(CorruptHeaderError, other);
SRE_DEFINE_ERROR(IoError, other);
SRE_DEFINE_ERROR(SampleRateMismatchError, invalid_parameter);
SRE_DEFINE_ERROR(NoiseTooShortError, signal_contract);
SRE_DEFINE_ERROR(SilentInputError, signal_contract);

// stft
SRE_DEFINE_ERROR(InvalidLengthError, invalid_parameter);
SRE_DEFINE_ERROR(SignalTooShortError, signal_contract);
SRE_DEFINE_ERROR(ColaViolationError, invalid_parameter);
SRE_DEFINE_ERROR(IndexOutOfRangeError, other);

// sr-classifier
SRE_DEFINE_ERROR(NegativeMagnitudeError, signal_contract);
SRE_DEFINE_ERROR(ZeroNoiseEstimateError, signal_contract);
SRE_DEFINE_ERROR(BinCountMismatchError, invalid_parameter);

// noise-tracker
SRE_DEFINE_ERROR(EmptyInitError, invalid_parameter);
SRE_DEFINE_ERROR(UninitializedStateError, other);

// metrics
SRE_DEFINE_ERROR(LengthMismatchError, signal_contract);
SRE_DEFINE_ERROR(AllFramesSilentError, signal_contract);
SRE_DEFINE_ERROR(SingularAutocorrelationError, signal_contract);

// viz
SRE_DEFINE_ERROR(EmptyMatrixError, invalid_parameter);

// configuration
SRE_DEFINE_ERROR(InvalidParameterError, invalid_parameter);

#undef SRE_DEFINE_ERROR

}  // namespace sre
