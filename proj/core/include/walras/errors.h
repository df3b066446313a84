// Copyright 2026 The Walras Authors
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

#ifndef WALRAS_ERRORS_H_
#define WALRAS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace walras {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad rational, index out of range, non-partition buckets,
// value lists of the wrong length.
class InputError : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for the arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The instance is larger than the configured enumeration or brute-force cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace walras

#endif  // WALRAS_ERRORS_H_
