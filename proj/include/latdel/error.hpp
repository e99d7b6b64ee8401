// Copyright 2026 The latdel Authors
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

namespace latdel {

// Base for every error the library raises on bad input. The CLI maps these to
// exit code 1; anything else escaping is treated as internal (exit code 2).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Enumeration would exceed the desk-scale limit.
class CapacityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Truncated series asked for a coefficient beyond its truncation degree.
class DegreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A binary word violating the start-with-0 / even-run-count convention.
class HypothesisError : public DomainError {
 public:
  HypothesisError(const std::string& what, std::string word)
      : DomainError(what), word_(std::move(word)) {}
  const std::string& word() const noexcept { return word_; }

 private:
  std::string word_;
};

class SchemaError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Internal consistency check failed (e.g. a Hensel lift that does not divide).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latdel
