// Copyright 2026 The Dynconn Authors.
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

#ifndef DYNCONN_ERRORS_H_
#define DYNCONN_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dynconn {

// Raised when a constructor or pure function receives an out-of-range
// argument (bad vertex count, bit width, malformed edge, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation's state precondition does not hold: linking two
// vertices already in one tree, cutting an absent edge, inserting a
// duplicate edge when the structure keeps an edge list, and so on.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dynconn

#endif  // DYNCONN_ERRORS_H_
