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

#ifndef MCONVEX_ERROR_HPP_
#define MCONVEX_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mconvex {

enum class ErrorKind {
  kValidation,    // malformed or out-of-range input value
  kDimension,     // vector lengths or simplex specs disagree
  kCapacity,      // enumeration would exceed the configured cap
  kPrecondition,  // operation called outside its domain
  kEmpty,         // operation needs a non-empty set
  kNumeric,       // zero likelihood, non-positive evaluation, etc.
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library. `index` is 0-based and names the
// offending coordinate or bound when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> index() const { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace mconvex

#endif  // MCONVEX_ERROR_HPP_
