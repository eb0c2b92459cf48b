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

#ifndef PLA_FIELDS_H_
#define PLA_FIELDS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace pla {

// The twenty profile fields used for matching.
enum class FieldKey {
  kEducation,
  kDegree,
  kCollegeUniversity,
  kIndustry,
  kOccupation,
  kCompany,
  kGender,
  kLanguage,
  kReligion,
  kEthnicity,
  kRelationshipStatus,
  kSports,
  kActivities,
  kSmoking,
  kDrinking,
  kHometown,
  kPinCode,
  kCity,
  kState,
  kCountry,
};

inline constexpr std::size_t kFieldCount = 20;

inline constexpr std::array<FieldKey, kFieldCount> kAllFields = {
    FieldKey::kEducation,   FieldKey::kDegree,
    FieldKey::kCollegeUniversity, FieldKey::kIndustry,
    FieldKey::kOccupation,  FieldKey::kCompany,
    FieldKey::kGender,      FieldKey::kLanguage,
    FieldKey::kReligion,    FieldKey::kEthnicity,
    FieldKey::kRelationshipStatus, FieldKey::kSports,
    FieldKey::kActivities,  FieldKey::kSmoking,
    FieldKey::kDrinking,    FieldKey::kHometown,
    FieldKey::kPinCode,     FieldKey::kCity,
    FieldKey::kState,       FieldKey::kCountry,
};

enum class Category {
  kEducationalProfessional,
  kPersonal,
  kInterest,
  kContact,
};

inline constexpr std::array<Category, 4> kAllCategories = {
    Category::kContact, Category::kPersonal, Category::kInterest,
    Category::kEducationalProfessional};

constexpr std::size_t FieldIndex(FieldKey f) {
  return static_cast<std::size_t>(f);
}

// Snake-case names ("pin_code", "college_university", ...). These are the
// keys used in snapshot files, weight files and CSV headers.
std::string_view FieldName(FieldKey f);
std::optional<FieldKey> ParseFieldName(std::string_view name);

Category CategoryOf(FieldKey f);

// Fields of a category in matching-matrix column order.
std::span<const FieldKey> FieldsOf(Category c);

// "contact", "personal", "interest", "education_professional".
std::string_view CategoryName(Category c);
// Also accepts "education" for the educational/professional category.
std::optional<Category> ParseCategoryName(std::string_view name);

}  // namespace pla

#endif  // PLA_FIELDS_H_
