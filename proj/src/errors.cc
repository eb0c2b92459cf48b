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

#include "pla/errors.h"

namespace pla {

InvalidId::InvalidId(const std::string& text)
    : Error("invalid id: \"" + text + "\"") {}

DuplicateProfile::DuplicateProfile(const std::string& id)
    : Error("duplicate profile: " + id), id_(id) {}

InvalidProfile::InvalidProfile(const std::string& id, const std::string& reason)
    : Error("invalid profile " + id + ": " + reason) {}

UnknownProfile::UnknownProfile(const std::string& id)
    : Error("unknown profile: " + id), id_(id) {}

InvalidPair::InvalidPair(const std::string& id)
    : Error("invalid pair: both ends are " + id) {}

DegenerateBase::DegenerateBase(const std::string& id, const std::string& what)
    : Error("degenerate base " + id + ": no " + what) {}

InvalidPath::InvalidPath(const std::string& from, const std::string& to)
    : Error("invalid path: no edge " + from + " -> " + to) {}

MissingUserId::MissingUserId() : Error("record has no userid") {}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace pla
