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

#include "pla/weights.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "pla/errors.h"

namespace pla {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view SchemeKindName(SchemeKind kind) {
  return kind == SchemeKind::kBinary ? "binary" : "hierarchy";
}

WeightScheme WeightScheme::WithOverrides(
    const std::map<FieldKey, std::uint32_t>& overrides) const {
  WeightScheme out = *this;
  for (const auto& [field, w] : overrides) {
    if (kind_ == SchemeKind::kBinary && w > 1) {
      throw InvalidConfig("binary weight for " + std::string(FieldName(field)) +
                          " must be 0 or 1, got " + std::to_string(w));
    }
    out.weights_[FieldIndex(field)] = w;
  }
  return out;
}

WeightScheme BinaryScheme(const std::map<FieldKey, bool>& mask) {
  std::array<std::uint32_t, kFieldCount> w;
  w.fill(1);
  for (const auto& [field, on] : mask) w[FieldIndex(field)] = on ? 1 : 0;
  return WeightScheme(SchemeKind::kBinary, w);
}

WeightScheme HierarchyScheme() {
  std::array<std::uint32_t, kFieldCount> w;
  w.fill(1);
  auto set = [&w](FieldKey f, std::uint32_t v) { w[FieldIndex(f)] = v; };
  set(FieldKey::kHometown, 3);
  set(FieldKey::kPinCode, 4);
  set(FieldKey::kCity, 3);
  set(FieldKey::kState, 2);
  set(FieldKey::kCountry, 1);
  set(FieldKey::kEducation, 1);
  set(FieldKey::kDegree, 2);
  set(FieldKey::kCollegeUniversity, 3);
  set(FieldKey::kIndustry, 1);
  set(FieldKey::kOccupation, 2);
  set(FieldKey::kCompany, 3);
  return WeightScheme(SchemeKind::kHierarchy, w);
}

std::map<FieldKey, std::uint32_t> ParseWeightOverrides(std::string_view text) {
  std::map<FieldKey, std::uint32_t> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(line_no, "expected field_key=integer");
    }
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto field = ParseFieldName(key);
    if (!field) {
      throw ParseError(line_no, "unknown field key \"" + std::string(key) + "\"");
    }
    std::uint32_t w = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), w);
    if (value.empty() || ec != std::errc() ||
        ptr != value.data() + value.size()) {
      throw ParseError(line_no, "weight for " + std::string(key) +
                                    " is not a non-negative integer");
    }
    out[*field] = w;
  }
  return out;
}

std::map<FieldKey, std::uint32_t> LoadWeightOverrides(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read weights file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseWeightOverrides(buf.str());
}

}  // namespace pla
