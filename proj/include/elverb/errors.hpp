// Copyright 2026 The elverb Authors
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

#ifndef ELVERB_ERRORS_HPP
#define ELVERB_ERRORS_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace elverb {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t line, std::size_t column,
             std::string found, std::set<std::string> expected)
      : Error(format(path, line, column, found, expected)),
        path_(std::move(path)),
        line_(line),
        column_(column),
        found_(std::move(found)),
        expected_(std::move(expected)) {}

  const std::string& path() const { return path_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& found() const { return found_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  static std::string format(const std::string& path, std::size_t line,
                            std::size_t column, const std::string& found,
                            const std::set<std::string>& expected) {
    std::string msg = (path.empty() ? std::string("<input>") : path) + ":" +
                      std::to_string(line) + ":" + std::to_string(column) +
                      ": unexpected " + (found.empty() ? "end of input" : "'" + found + "'");
    if (!expected.empty()) {
      msg += ", expected one of:";
      for (const auto& e : expected) msg += " " + e;
    }
    return msg;
  }

  std::string path_;
  std::size_t line_;
  std::size_t column_;
  std::string found_;
  std::set<std::string> expected_;
};

class UndeclaredEntity : public Error {
 public:
  explicit UndeclaredEntity(const std::string& id)
      : Error("undeclared entity " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class UnknownClass : public Error {
 public:
  explicit UnknownClass(const std::string& id)
      : Error("unknown class " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class LexiconFormatError : public Error {
 public:
  LexiconFormatError(const std::string& path, std::size_t line, const std::string& what)
      : Error((path.empty() ? std::string("<lexicon>") : path) + ":" +
              std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NotInFrame : public Error {
 public:
  using Error::Error;
};

class NotConvertible : public Error {
 public:
  using Error::Error;
};

class EquivalentExplosion : public Error {
 public:
  EquivalentExplosion(std::size_t cap)
      : Error("equivalent-version enumeration exceeds cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

}  // namespace elverb

#endif  // ELVERB_ERRORS_HPP
