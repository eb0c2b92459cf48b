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

#ifndef PLA_INGEST_H_
#define PLA_INGEST_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pla/fields.h"
#include "pla/social_graph.h"

namespace pla {

inline constexpr std::string_view kFriendToken = "FriendsList.aspx?uid=";
inline constexpr std::string_view kCommunityToken = "Community.aspx?cmm=";

// What the token scanner pulls out of one extractor dump file.
struct RawRecord {
  std::optional<std::string> self_id;
  std::optional<std::string> display_name;
  // File order; keys are case-folded and trimmed, first occurrence wins.
  std::vector<std::pair<std::string, std::string>> raw_fields;
  // Deduplicated, first occurrence order.
  std::vector<std::string> friend_ids;
  std::vector<std::string> community_ids;

  friend bool operator==(const RawRecord&, const RawRecord&) = default;
};

// Scans dump text line by line.
//  - every decimal run right after kFriendToken is a friend id, after
//    kCommunityToken a community id;
//  - any other line holding '=' is a key=value pair split at the first '=';
//    "userid" also sets self_id and "name" sets display_name;
//  - everything else is ignored.
RawRecord ExtractTokens(std::string_view dump_text);

// Trim, collapse whitespace runs to one space, ASCII case-fold.
std::string NormalizeValue(std::string_view value);

// Maps a raw key ("lan.speak", "area code", "sex", ...) to its field.
std::optional<FieldKey> ResolveFieldKey(std::string_view raw_key);

// Per-field variant -> canonical value table ("state\tm.p\tmadhya pradesh").
class AliasTable {
 public:
  AliasTable() = default;

  // Lines are canonical_field_key TAB variant TAB canonical_value. Blank
  // lines and '#' comments are skipped. Throws ParseError.
  static AliasTable Parse(std::string_view text);
  static AliasTable Load(const std::filesystem::path& path);

  // `value` must already be normalized.
  std::string Resolve(FieldKey field, const std::string& value) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::map<std::pair<FieldKey, std::string>, std::string> map_;
};

// Throws MissingUserId when raw.self_id is absent. Unrecognized keys and
// empty values are dropped, a self reference in the friend list is dropped.
UserProfile Canonicalize(const RawRecord& raw,
                         const AliasTable& aliases = AliasTable());

// Inverse view of a profile as a raw record with canonical keys.
RawRecord ToRawRecord(const UserProfile& profile);

// Line-delimited JSON snapshot: one object per profile with members "id",
// "name", "fields", "friends", "communities", sorted by id.
void WriteSnapshot(const SocialGraph& g, std::ostream& out);
void WriteSnapshot(const SocialGraph& g, const std::filesystem::path& path);

// Throws ParseError (with 1-based line) or DuplicateProfile.
SocialGraph ParseSnapshot(std::istream& in);
SocialGraph ReadSnapshot(const std::filesystem::path& path);

}  // namespace pla

#endif  // PLA_INGEST_H_
