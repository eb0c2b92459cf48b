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

#ifndef PLA_IDS_H_
#define PLA_IDS_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace pla {

inline constexpr std::size_t kMaxIdLength = 20;

// True for 1..20 ASCII decimal digits and nothing else.
bool IsDigitId(std::string_view text);

// Opaque decimal identifier. Ids are never converted to integers: the
// network's 20-digit ids overflow signed 64-bit and leading zeros are
// significant. Ordering is plain text ordering.
template <typename Tag>
class DigitId {
 public:
  // Throws InvalidId.
  explicit DigitId(std::string_view text);

  static std::optional<DigitId> Parse(std::string_view text) {
    if (!IsDigitId(text)) return std::nullopt;
    return DigitId(text);
  }

  const std::string& str() const { return value_; }

  friend auto operator<=>(const DigitId&, const DigitId&) = default;
  friend bool operator==(const DigitId&, const DigitId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DigitId& id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

using ProfileId = DigitId<struct ProfileIdTag>;
using CommunityId = DigitId<struct CommunityIdTag>;

extern template class DigitId<ProfileIdTag>;
extern template class DigitId<CommunityIdTag>;

}  // namespace pla

template <typename Tag>
struct std::hash<pla::DigitId<Tag>> {
  std::size_t operator()(const pla::DigitId<Tag>& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

#endif  // PLA_IDS_H_
