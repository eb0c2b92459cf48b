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

#include "pla/fields.h"

namespace pla {
namespace {

constexpr std::array<std::string_view, kFieldCount> kFieldNames = {
    "education", "degree",   "college_university", "industry",
    "occupation", "company", "gender",             "language",
    "religion",  "ethnicity", "relationship_status", "sports",
    "activities", "smoking", "drinking",           "hometown",
    "pin_code",  "city",     "state",              "country",
};

constexpr std::array<FieldKey, 5> kContactFields = {
    FieldKey::kHometown, FieldKey::kPinCode, FieldKey::kCity,
    FieldKey::kState, FieldKey::kCountry};

constexpr std::array<FieldKey, 5> kPersonalFields = {
    FieldKey::kLanguage, FieldKey::kReligion, FieldKey::kEthnicity,
    FieldKey::kGender, FieldKey::kRelationshipStatus};

constexpr std::array<FieldKey, 4> kInterestFields = {
    FieldKey::kSmoking, FieldKey::kDrinking, FieldKey::kSports,
    FieldKey::kActivities};

constexpr std::array<FieldKey, 6> kEducationalProfessionalFields = {
    FieldKey::kEducation, FieldKey::kDegree,  FieldKey::kCollegeUniversity,
    FieldKey::kIndustry,  FieldKey::kCompany, FieldKey::kOccupation};

}  // namespace

std::string_view FieldName(FieldKey f) { return kFieldNames[FieldIndex(f)]; }

std::optional<FieldKey> ParseFieldName(std::string_view name) {
  for (FieldKey f : kAllFields) {
    if (FieldName(f) == name) return f;
  }
  return std::nullopt;
}

Category CategoryOf(FieldKey f) {
  switch (f) {
    case FieldKey::kEducation:
    case FieldKey::kDegree:
    case FieldKey::kCollegeUniversity:
    case FieldKey::kIndustry:
    case FieldKey::kOccupation:
    case FieldKey::kCompany:
      return Category::kEducationalProfessional;
    case FieldKey::kGender:
    case FieldKey::kLanguage:
    case FieldKey::kReligion:
    case FieldKey::kEthnicity:
    case FieldKey::kRelationshipStatus:
      return Category::kPersonal;
    case FieldKey::kSports:
    case FieldKey::kActivities:
    case FieldKey::kSmoking:
    case FieldKey::kDrinking:
      return Category::kInterest;
    case FieldKey::kHometown:
    case FieldKey::kPinCode:
    case FieldKey::kCity:
    case FieldKey::kState:
    case FieldKey::kCountry:
      return Category::kContact;
  }
  return Category::kContact;  // unreachable
}

std::span<const FieldKey> FieldsOf(Category c) {
  switch (c) {
    case Category::kContact:
      return kContactFields;
    case Category::kPersonal:
      return kPersonalFields;
    case Category::kInterest:
      return kInterestFields;
    case Category::kEducationalProfessional:
      return kEducationalProfessionalFields;
  }
  return {};
}

std::string_view CategoryName(Category c) {
  switch (c) {
    case Category::kContact:
      return "contact";
    case Category::kPersonal:
      return "personal";
    case Category::kInterest:
      return "interest";
    case Category::kEducationalProfessional:
      return "education_professional";
  }
  return "";
}

std::optional<Category> ParseCategoryName(std::string_view name) {
  if (name == "education") return Category::kEducationalProfessional;
  for (Category c : kAllCategories) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

}  // namespace pla
