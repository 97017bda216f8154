// Copyright 2026 The tposc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace tposc {

/// Raised when fixed-width root arithmetic would wrap around.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {

inline int checked_add(int a, int b) {
  int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in root arithmetic");
  return out;
}

inline int checked_sub(int a, int b) {
  int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in root arithmetic");
  return out;
}

inline int checked_mul(int a, int b) {
  int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in root arithmetic");
  return out;
}

}  // namespace detail
}  // namespace tposc
