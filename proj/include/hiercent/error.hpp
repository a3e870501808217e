// Copyright 2026 The hiercent Authors
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

#ifndef HIERCENT_ERROR_HPP_
#define HIERCENT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hiercent {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. `line()` is 1-based; 0 when the error is not
// tied to a particular line (e.g. an input with no usable edges).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller-supplied parameter is outside its valid domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed (singular system, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A correlation is mathematically undefined for the given input
// (constant vector, all pairs tied, fewer than two observations).
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

}  // namespace hiercent

#endif  // HIERCENT_ERROR_HPP_
