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

#ifndef FAIRDUAL_ERRORS_HPP_
#define FAIRDUAL_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairdual {

// Base of every error this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad rationals, invalid instances,
// unknown type names, allocations that do not fit their instance.
class InputError : public Error {
 public:
  using Error::Error;
};

// A goods criterion was applied to chores (or vice versa), or an operation
// that needs a sign-pure instance received a mixed one.
class OrientationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive operation would exceed its enumeration budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t cap)
      : Error("enumeration needs " + std::to_string(required) +
              " evaluations, cap is " + std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

// An operation's documented precondition does not hold for its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairdual

#endif  // FAIRDUAL_ERRORS_HPP_
