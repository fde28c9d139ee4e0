// Copyright 2026 The cbst Authors.
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

#ifndef CBST_ERRORS_H_
#define CBST_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cbst {

// Base class for every error raised by the library. The CLI maps
// ConfigError to exit status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

// Malformed or invalid input data (dataset records, lexicon lines, domain
// invariant violations).
class DataError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "data"; }
};

// Bad configuration: unknown keys, out-of-range values, inconsistent plans.
class ConfigError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "config"; }
};

// Corrupted, truncated or version-mismatched checkpoint.
class FormatError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "format"; }
};

}  // namespace cbst

#endif  // CBST_ERRORS_H_
