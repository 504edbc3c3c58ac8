// Copyright 2026 The penclose Authors
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

#ifndef PENCLOSE_ERROR_HPP_
#define PENCLOSE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penclose {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotHomothetic,
  kNonPositiveScale,
  kDegenerate,
  kDuplicateId,
  kIo,
};

// Base of every exception thrown by the library. The C API maps `code()`
// one-to-one onto penclose_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Input text could not be parsed. Line and column are 1-based; a column of 0
// means the whole line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : Error(ErrorCode::kParse, format(line, column, detail)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& detail) {
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + detail;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace penclose

#endif  // PENCLOSE_ERROR_HPP_
