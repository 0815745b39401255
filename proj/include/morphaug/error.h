// Copyright 2026 The morphaug Authors.
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

#ifndef MORPHAUG_ERROR_H_
#define MORPHAUG_ERROR_H_

#include <stdexcept>
#include <string>

namespace morphaug {

// Base of every error the library throws. kind() is a short stable word
// used by the command line tool in its machine-readable error line.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed or inconsistent input structure (line-count mismatch, bad links).
class StructuralError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "structural"; }
};

class EncodingError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "encoding"; }
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

// Invalid parameters or inputs that leave nothing to work with.
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

// Argument outside the domain of a mathematical operation.
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

// The generator ran out of unique synthetic pairs before a tier was full.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t achieved)
      : Error(what), achieved_(achieved) {}
  const char* kind() const noexcept override { return "capacity"; }
  std::size_t achieved() const noexcept { return achieved_; }

 private:
  std::size_t achieved_;
};

}  // namespace morphaug

#endif  // MORPHAUG_ERROR_H_
