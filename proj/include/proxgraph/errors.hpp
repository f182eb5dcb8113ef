// Copyright 2026 The Proxgraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace proxgraph {

// Malformed graph construction (bad endpoint, nonpositive weight, ...).
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A measure was asked to run outside its preconditions.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Route series does not converge (spectral radius of E is >= 1).
class DivergentSeries : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Rank-one update with a vanishing denominator.
class SingularUpdate : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Exponential-time routine refused because an instance exceeds its cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace proxgraph
