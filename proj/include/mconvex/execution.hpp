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

#ifndef MCONVEX_EXECUTION_HPP_
#define MCONVEX_EXECUTION_HPP_

namespace mconvex {

// Selects between the plain serial loop (kept as the reference
// implementation) and the OpenMP kernel. Both produce identical results;
// parallel kernels reduce in a fixed order.
enum class Execution { kSerial, kParallel };

}  // namespace mconvex

#endif  // MCONVEX_EXECUTION_HPP_
