// Copyright 2026 The rglab Authors
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

#ifndef RGLAB_ERRORS_H_
#define RGLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rglab {

// Invalid argument supplied to a library operation (p outside [0,1], n < 2
// for a coupled pair, overlapping core/order sets, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to bracket or converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Statistics requested on input that carries no information (zero variance).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rglab

#endif  // RGLAB_ERRORS_H_
