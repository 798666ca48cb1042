// Copyright 2026 The tiger2 Authors.
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

#ifndef TIGER2_ERROR_HPP_
#define TIGER2_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tiger2 {

// Base class for every fatal failure raised by the library. Recoverable
// problems with a corpus are reported as Diagnostics instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is not well-formed (XML syntax, CoNLL row layout, ...).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

// A node id that was required to exist does not.
class LookupError : public Error {
 public:
  using Error::Error;
};

// A declaration violates the registry invariants. code() is one of the
// diagnostic codes (E-DUPDECL, E-BADDECL).
class DeclarationError : public Error {
 public:
  DeclarationError(std::string code, const std::string& what)
      : Error(what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// An exporter refused a corpus it cannot represent.
class ExportRefused : public Error {
 public:
  using Error::Error;
};

// Mapper registry misuse: duplicate or unknown format identifiers.
class RegistryError : public Error {
 public:
  using Error::Error;
};

}  // namespace tiger2

#endif  // TIGER2_ERROR_HPP_
