// Copyright 2026 The triq Authors
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


#include "triq/error.hpp"

namespace triq {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput:
            return "DegenerateInput";
        case ErrorKind::NotNormalized:
            return "NotNormalized";
        case ErrorKind::NotUnitary:
            return "NotUnitary";
        case ErrorKind::InvalidForm:
            return "InvalidForm";
        case ErrorKind::NotDecomposable:
            return "NotDecomposable";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace triq
