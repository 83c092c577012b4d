// Copyright 2026 The Authors.
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

#include "mconvex/error.hpp"

namespace mconvex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kDimension:
      return "dimension";
    case ErrorKind::kCapacity:
      return "capacity";
    case ErrorKind::kPrecondition:
      return "precondition";
    case ErrorKind::kEmpty:
      return "empty";
    case ErrorKind::kNumeric:
      return "numeric";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(message), kind_(kind), index_(index) {}

}  // namespace mconvex
