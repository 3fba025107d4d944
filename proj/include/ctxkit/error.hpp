// Copyright 2026 The ctxkit Authors
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

namespace ctxkit {

/// Failure categories. Each one maps onto a distinct process exit code in the
/// command-line tool.
enum class ErrorKind {
    parse,
    validation,
    unknown_label,
    io,
};

inline int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parse:
            return 2;
        case ErrorKind::validation:
            return 3;
        case ErrorKind::unknown_label:
            return 4;
        case ErrorKind::io:
            return 5;
    }
    return 1;
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Malformed input text. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, std::size_t line = 0, std::size_t column = 0)
        : Error(ErrorKind::parse, decorate(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    static std::string decorate(const std::string &message, std::size_t line, std::size_t column) {
        if (line == 0) {
            return column == 0 ? message : "column " + std::to_string(column) + ": " + message;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that violates a mathematical precondition (zero vector,
/// dimension mismatch, duplicate ray, invalid density matrix, ...).
class ValidationError : public Error {
   public:
    explicit ValidationError(const std::string &message) : Error(ErrorKind::validation, message) {}
};

class UnknownLabelError : public Error {
   public:
    explicit UnknownLabelError(const std::string &label)
        : Error(ErrorKind::unknown_label, "unknown ray label '" + label + "'"), label_(label) {}

    const std::string &label() const noexcept {
        return label_;
    }

   private:
    std::string label_;
};

class IoError : public Error {
   public:
    explicit IoError(const std::string &message) : Error(ErrorKind::io, message) {}
};

}  // namespace ctxkit
