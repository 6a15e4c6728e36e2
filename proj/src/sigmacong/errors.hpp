/*
Copyright 2026 The sigmacong Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace sigmacong {

// Argument violates an operation's precondition (n = 0 where n >= 1 is
// required, lo > hi, order mismatch, unknown enum value, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index or argument exceeds the coverage of a table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exact integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A division that must be exact left a remainder.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested size exceeds the documented practical caps.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigmacong
