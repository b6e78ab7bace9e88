// Copyright 2026 The Wigtomo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace wigtomo {

/// Precondition violated: bad dimension, inadmissible index, mismatched grids.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reserved surface that is intentionally not built (e.g. N >= 2 scanning).
class UnimplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input carries no usable signal (all-zero correlation matrix, vanishing
/// droplet, singular Choi matrix).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CalibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wigtomo
