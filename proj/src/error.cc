// Copyright 2026 The cellcss Authors
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

#include "cellcss/error.h"

namespace cellcss {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::BadModulus:
            return "BadModulus";
        case ErrorCode::NotInLattice:
            return "NotInLattice";
        case ErrorCode::InvalidComplex:
            return "InvalidComplex";
        case ErrorCode::IncoherentGluing:
            return "IncoherentGluing";
        case ErrorCode::DimensionTooHigh:
            return "DimensionTooHigh";
        case ErrorCode::UnknownBuiltin:
            return "UnknownBuiltin";
        case ErrorCode::BadParam:
            return "BadParam";
        case ErrorCode::BadColumnWeight:
            return "BadColumnWeight";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::TooShort:
            return "TooShort";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::ModulusMismatch:
            return "ModulusMismatch";
        case ErrorCode::TypeMismatch:
            return "TypeMismatch";
        case ErrorCode::InvariantViolation:
            return "InvariantViolation";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace cellcss
