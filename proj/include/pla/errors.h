// Copyright 2026 The PLA Authors
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

#ifndef PLA_ERRORS_H_
#define PLA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pla {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text that is not a 1-20 character decimal identifier.
class InvalidId : public Error {
 public:
  explicit InvalidId(const std::string& text);
};

class DuplicateProfile : public Error {
 public:
  explicit DuplicateProfile(const std::string& id);
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// A profile that breaks a UserProfile invariant (self-friend, repeated
// friend or community, empty field value).
class InvalidProfile : public Error {
 public:
  InvalidProfile(const std::string& id, const std::string& reason);
};

class UnknownProfile : public Error {
 public:
  explicit UnknownProfile(const std::string& id);
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// An operation on an ordered pair was given the same id twice.
class InvalidPair : public Error {
 public:
  explicit InvalidPair(const std::string& id);
};

// WAF scaling needs a nonzero denominator.
class DegenerateBase : public Error {
 public:
  DegenerateBase(const std::string& id, const std::string& what);
};

class InvalidPath : public Error {
 public:
  InvalidPath(const std::string& from, const std::string& to);
};

class MissingUserId : public Error {
 public:
  MissingUserId();
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based; 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pla

#endif  // PLA_ERRORS_H_
