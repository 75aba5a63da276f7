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

#ifndef CELLCSS_ERROR_H
#define CELLCSS_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace cellcss {

enum class ErrorCode {
    InvalidArgument,
    BadModulus,
    NotInLattice,
    InvalidComplex,
    IncoherentGluing,
    DimensionTooHigh,
    UnknownBuiltin,
    BadParam,
    BadColumnWeight,
    TooLarge,
    TooShort,
    LengthMismatch,
    ModulusMismatch,
    TypeMismatch,
    InvariantViolation,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Domain error raised by every module. The code identifies the failure class;
/// what() carries a human readable message naming the offending item.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace cellcss

#endif
