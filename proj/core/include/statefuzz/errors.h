// Copyright 2026 The statefuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STATEFUZZ_ERRORS_H_
#define STATEFUZZ_ERRORS_H_

#include <stdexcept>
#include <string>

namespace statefuzz {

// Base class of every error raised by the library. Subclasses name the
// failed contract so callers (and the CLI exit-code mapping) can tell a bad
// model file from a misbehaving SUT.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSymbolError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbolError : public Error {
 public:
  using Error::Error;
};

class InvalidMachineError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class CompletenessError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class DeterminismError : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace statefuzz

#endif  // STATEFUZZ_ERRORS_H_
