// Copyright 2026 The qsym Authors
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

#include "qsym/error.h"

namespace qsym {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::SizeMismatch:
            return "SizeMismatch";
        case ErrorKind::SizeCap:
            return "SizeCap";
        case ErrorKind::Overflow:
            return "Overflow";
        case ErrorKind::NotInFamily:
            return "NotInFamily";
        case ErrorKind::NotBasis:
            return "NotBasis";
        case ErrorKind::NotFactorable:
            return "NotFactorable";
        case ErrorKind::PromiseViolated:
            return "PromiseViolated";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace qsym
