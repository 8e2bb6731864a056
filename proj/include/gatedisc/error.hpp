// Copyright 2026 The gatedisc Authors
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

namespace gatedisc {

enum class ErrorCode {
    NotUnitary,
    NotNormalized,
    DimensionMismatch,
    InvalidArgument,
    InvalidCircuit,
    NotDistinguishable,
    CopiesOutOfScope,
    SpreadTooSmall,
    NotOrthogonal,
    NotTraceless,
    NoMeasurement,
    MapOutOfRange,
    SyntaxError,
    UnsupportedGate,
    RegisterMismatch,
    EmptyInput,
    Io,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::InvalidCircuit:
            return "InvalidCircuit";
        case ErrorCode::NotDistinguishable:
            return "NotDistinguishable";
        case ErrorCode::CopiesOutOfScope:
            return "CopiesOutOfScope";
        case ErrorCode::SpreadTooSmall:
            return "SpreadTooSmall";
        case ErrorCode::NotOrthogonal:
            return "NotOrthogonal";
        case ErrorCode::NotTraceless:
            return "NotTraceless";
        case ErrorCode::NoMeasurement:
            return "NoMeasurement";
        case ErrorCode::MapOutOfRange:
            return "MapOutOfRange";
        case ErrorCode::SyntaxError:
            return "SyntaxError";
        case ErrorCode::UnsupportedGate:
            return "UnsupportedGate";
        case ErrorCode::RegisterMismatch:
            return "RegisterMismatch";
        case ErrorCode::EmptyInput:
            return "EmptyInput";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

}  // namespace gatedisc
