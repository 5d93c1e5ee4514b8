// Copyright 2026 The itervote Authors
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

#ifndef ITERVOTE_ERROR_HPP_
#define ITERVOTE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace itervote {

enum class ErrorKind {
  kInvalidInput,
  kInvalidConfiguration,
  kInvalidSchedule,
  kResourceLimit,
  kNotApplicable,
  kUnsupported,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this exception; the kind is
// what callers (and the CLI exit code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace itervote

#endif  // ITERVOTE_ERROR_HPP_
