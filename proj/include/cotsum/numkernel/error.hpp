// Copyright 2026 The cotsum Authors
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

#ifndef COTSUM_NUMKERNEL_ERROR_HPP
#define COTSUM_NUMKERNEL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cotsum {

/// Failure categories raised by the library. The C API maps each one onto a
/// distinct status code.
enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DivisionByZero,
  ZeroConstantTerm,
  NonzeroInnerConstant,
  PoleAtOrigin,
  BadDimension,
  NonRealValue,
  SingularAlpha,
  BadK,
  BadN,
  TooLarge,
  ParityMismatch,
  Internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) raise(code, what);
}

}  // namespace cotsum

#endif  // COTSUM_NUMKERNEL_ERROR_HPP
