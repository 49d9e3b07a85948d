// Copyright 2026 The wlperm Authors
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

#ifndef WLPERM_ERROR_HPP_
#define WLPERM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace wlperm {

// Caller passed arguments that violate a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap (oracle, enumeration, extension, tuple count) was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kTruncated,
  kBadCharacter,
  kTrailingData,
  kNonzeroPadding,
  kBadJson,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ParseErrorKind kind() const { return kind_; }

 private:
  ParseErrorKind kind_;
};

// Raised when a result computed by the library fails one of its own
// structural postconditions (e.g. a closure that is not coherent).
class InternalCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wlperm

#endif  // WLPERM_ERROR_HPP_
