// Copyright 2026 The djnmr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DJNMR_ERRORS_HPP
#define DJNMR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace djnmr {

/// Raised for invalid user-facing input (bad arguments, malformed files,
/// out-of-range indices). The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Pulse-program syntax error; carries the 1-based source line.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A Boolean function whose algebraic normal form cannot be lowered to
/// the available pulse gadgets (degree above 2).
class UnsupportedFunctionError : public ValidationError {
 public:
  explicit UnsupportedFunctionError(const std::string& what) : ValidationError(what) {}
};

}  // namespace djnmr

#endif  // DJNMR_ERRORS_HPP
