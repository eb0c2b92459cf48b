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

#ifndef PLA_WEIGHTS_H_
#define PLA_WEIGHTS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string_view>

#include "pla/fields.h"

namespace pla {

enum class SchemeKind { kBinary, kHierarchy };

std::string_view SchemeKindName(SchemeKind kind);

// Per-field non-negative integer weights. Binary schemes hold only 0/1.
class WeightScheme {
 public:
  SchemeKind kind() const { return kind_; }
  std::uint32_t weight(FieldKey f) const { return weights_[FieldIndex(f)]; }

  // Returns a copy with the given weights replaced. For binary schemes every
  // override must be 0 or 1 (InvalidConfig otherwise).
  WeightScheme WithOverrides(
      const std::map<FieldKey, std::uint32_t>& overrides) const;

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;

 private:
  friend WeightScheme BinaryScheme(const std::map<FieldKey, bool>& mask);
  friend WeightScheme HierarchyScheme();

  WeightScheme(SchemeKind kind, std::array<std::uint32_t, kFieldCount> w)
      : kind_(kind), weights_(w) {}

  SchemeKind kind_;
  std::array<std::uint32_t, kFieldCount> weights_;
};

// Unmentioned fields weigh 1; a false entry masks the field out.
WeightScheme BinaryScheme(const std::map<FieldKey, bool>& mask = {});

// Contact: hometown 3, pin code 4, city 3, state 2, country 1.
// Educational: education 1, degree 2, college/university 3.
// Professional: industry 1, occupation 2, company 3.
// Personal and interest fields have no hierarchy and weigh 1.
WeightScheme HierarchyScheme();

// Parses "field_key=integer" lines. Blank lines and lines starting with '#'
// are skipped. Throws ParseError on unknown keys or malformed integers.
std::map<FieldKey, std::uint32_t> ParseWeightOverrides(std::string_view text);

std::map<FieldKey, std::uint32_t> LoadWeightOverrides(
    const std::filesystem::path& path);

}  // namespace pla

#endif  // PLA_WEIGHTS_H_
