// Copyright 2026 The evss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace evss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied parameters that violate an operation's preconditions.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A participant index or generation lies beyond what a layout or scheme can serve.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Shares are mutually inconsistent, or two reconstruction routes disagree.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive audit was asked for a parameter set it cannot enumerate.
class RefusalError : public Error {
 public:
  using Error::Error;
};

}  // namespace evss
