// Copyright 2026 The symext Authors.
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

#ifndef SYMEXT_ERROR_HPP
#define SYMEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace symext {

/// Bad input: wrong dimensions, out-of-range parameters, malformed files,
/// matrices that fail the state checks.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what);
};

/// The numerics gave up (iteration cap, failed factorization).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what);
};

}  // namespace symext

#endif  // SYMEXT_ERROR_HPP
