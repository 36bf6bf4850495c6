// Copyright 2026 The qmul Authors
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

#include "qmul/error.hpp"

namespace qmul {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "invalid-argument";
        case ErrorKind::InvalidGate:
            return "invalid-gate";
        case ErrorKind::UnsupportedMode:
            return "unsupported-mode";
        case ErrorKind::OutOfRange:
            return "out-of-range";
        case ErrorKind::AboveThreshold:
            return "above-threshold";
        case ErrorKind::ModelInfeasible:
            return "model-infeasible";
        case ErrorKind::InvalidCombination:
            return "invalid-combination";
        case ErrorKind::UnknownPreset:
            return "unknown-preset";
        case ErrorKind::ParseError:
            return "parse-error";
        case ErrorKind::MissingField:
            return "missing-field";
        case ErrorKind::RangeError:
            return "range-error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qmul
