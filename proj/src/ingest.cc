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

#include "pla/ingest.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "pla/errors.h"

namespace pla {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

void AppendUnique(std::vector<std::string>& list, std::string value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) {
    list.push_back(std::move(value));
  }
}

// Collects the decimal run following every occurrence of `token`.
void ScanToken(std::string_view line, std::string_view token,
               std::vector<std::string>& out) {
  for (auto pos = line.find(token); pos != std::string_view::npos;
       pos = line.find(token, pos + 1)) {
    const std::size_t start = pos + token.size();
    std::size_t end = start;
    while (end < line.size() && line[end] >= '0' && line[end] <= '9') ++end;
    const std::string_view run = line.substr(start, end - start);
    if (IsDigitId(run)) AppendUnique(out, std::string(run));
  }
}

struct KeyAlias {
  std::string_view key;
  FieldKey field;
};

// Keys after NormalizeValue. Canonical snake-case names map to themselves.
constexpr KeyAlias kKeyAliases[] = {
    {"education", FieldKey::kEducation},
    {"degree", FieldKey::kDegree},
    {"college", FieldKey::kCollegeUniversity},
    {"college/university", FieldKey::kCollegeUniversity},
    {"college_university", FieldKey::kCollegeUniversity},
    {"university", FieldKey::kCollegeUniversity},
    {"industry", FieldKey::kIndustry},
    {"occupation", FieldKey::kOccupation},
    {"company", FieldKey::kCompany},
    {"company/organization", FieldKey::kCompany},
    {"organization", FieldKey::kCompany},
    {"gender", FieldKey::kGender},
    {"sex", FieldKey::kGender},
    {"language", FieldKey::kLanguage},
    {"languages", FieldKey::kLanguage},
    {"lan.speak", FieldKey::kLanguage},
    {"language speak", FieldKey::kLanguage},
    {"languages speak", FieldKey::kLanguage},
    {"languages spoken", FieldKey::kLanguage},
    {"religion", FieldKey::kReligion},
    {"ethnicity", FieldKey::kEthnicity},
    {"status", FieldKey::kRelationshipStatus},
    {"relationship status", FieldKey::kRelationshipStatus},
    {"relationship_status", FieldKey::kRelationshipStatus},
    {"sports", FieldKey::kSports},
    {"activities", FieldKey::kActivities},
    {"activity", FieldKey::kActivities},
    {"smoking", FieldKey::kSmoking},
    {"drinking", FieldKey::kDrinking},
    {"hometown", FieldKey::kHometown},
    {"home town", FieldKey::kHometown},
    {"pin code", FieldKey::kPinCode},
    {"pin_code", FieldKey::kPinCode},
    {"pin postal code", FieldKey::kPinCode},
    {"area code", FieldKey::kPinCode},
    {"zip code", FieldKey::kPinCode},
    {"postal code", FieldKey::kPinCode},
    {"zip/postal code", FieldKey::kPinCode},
    {"city", FieldKey::kCity},
    {"state", FieldKey::kState},
    {"country", FieldKey::kCountry},
};

std::string ReadWholeFile(const std::filesystem::path& path,
                          std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + std::string(what) + ": " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename F>
void ForEachLine(std::string_view text, F&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++line_no, line);
    pos = end + 1;
  }
}

}  // namespace

RawRecord ExtractTokens(std::string_view dump_text) {
  RawRecord rec;
  ForEachLine(dump_text, [&rec](std::size_t, std::string_view line) {
    const bool has_link = line.find(kFriendToken) != std::string_view::npos ||
                          line.find(kCommunityToken) != std::string_view::npos;
    if (has_link) {
      ScanToken(line, kFriendToken, rec.friend_ids);
      ScanToken(line, kCommunityToken, rec.community_ids);
      return;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) return;
    std::string key = AsciiLower(Trim(line.substr(0, eq)));
    if (key.empty()) return;
    const std::string_view value = Trim(line.substr(eq + 1));
    const bool seen =
        std::any_of(rec.raw_fields.begin(), rec.raw_fields.end(),
                    [&key](const auto& kv) { return kv.first == key; });
    if (seen) return;
    if (key == "userid" && IsDigitId(value)) rec.self_id = std::string(value);
    if (key == "name") rec.display_name = std::string(value);
    rec.raw_fields.emplace_back(std::move(key), std::string(value));
  });
  return rec;
}

std::string NormalizeValue(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  bool pending_space = false;
  for (char c : Trim(value)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

std::optional<FieldKey> ResolveFieldKey(std::string_view raw_key) {
  const std::string key = NormalizeValue(raw_key);
  for (const auto& alias : kKeyAliases) {
    if (alias.key == key) return alias.field;
  }
  return std::nullopt;
}

AliasTable AliasTable::Parse(std::string_view text) {
  AliasTable table;
  ForEachLine(text, [&table](std::size_t line_no, std::string_view line) {
    if (Trim(line).empty() || Trim(line).front() == '#') return;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos ||
        line.find('\t', t2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected field TAB variant TAB canonical");
    }
    const std::string_view key = Trim(line.substr(0, t1));
    const auto field = ParseFieldName(key);
    if (!field) {
      throw ParseError(line_no, "unknown field key \"" + std::string(key) + "\"");
    }
    std::string variant = NormalizeValue(line.substr(t1 + 1, t2 - t1 - 1));
    std::string canonical = NormalizeValue(line.substr(t2 + 1));
    if (variant.empty() || canonical.empty()) {
      throw ParseError(line_no, "empty alias value");
    }
    table.map_[{*field, std::move(variant)}] = std::move(canonical);
  });
  return table;
}

AliasTable AliasTable::Load(const std::filesystem::path& path) {
  return Parse(ReadWholeFile(path, "alias table"));
}

std::string AliasTable::Resolve(FieldKey field, const std::string& value) const {
  const auto it = map_.find({field, value});
  return it == map_.end() ? value : it->second;
}

UserProfile Canonicalize(const RawRecord& raw, const AliasTable& aliases) {
  if (!raw.self_id) throw MissingUserId();
  UserProfile p{.id = ProfileId(*raw.self_id),
                .display_name = raw.display_name.value_or(""),
                .fields = {},
                .friends = {},
                .communities = {}};
  for (const auto& [key, value] : raw.raw_fields) {
    const auto field = ResolveFieldKey(key);
    if (!field || p.fields.contains(*field)) continue;
    std::string canonical = aliases.Resolve(*field, NormalizeValue(value));
    if (!canonical.empty()) p.fields.emplace(*field, std::move(canonical));
  }
  std::unordered_set<std::string> seen;
  for (const auto& f : raw.friend_ids) {
    if (f == p.id.str() || !seen.insert(f).second) continue;
    p.friends.emplace_back(f);
  }
  seen.clear();
  for (const auto& c : raw.community_ids) {
    if (seen.insert(c).second) p.communities.emplace_back(c);
  }
  return p;
}

RawRecord ToRawRecord(const UserProfile& profile) {
  RawRecord rec;
  rec.self_id = profile.id.str();
  rec.display_name = profile.display_name;
  rec.raw_fields.emplace_back("userid", profile.id.str());
  rec.raw_fields.emplace_back("name", profile.display_name);
  for (const auto& [key, value] : profile.fields) {
    rec.raw_fields.emplace_back(std::string(FieldName(key)), value);
  }
  for (const auto& f : profile.friends) rec.friend_ids.push_back(f.str());
  for (const auto& c : profile.communities) rec.community_ids.push_back(c.str());
  return rec;
}

void WriteSnapshot(const SocialGraph& g, std::ostream& out) {
  for (const UserProfile& p : g.profiles()) {
    OrderedJson line;
    line["id"] = p.id.str();
    line["name"] = p.display_name;
    Json fields = Json::object();
    for (const auto& [key, value] : p.fields) fields[FieldName(key)] = value;
    line["fields"] = std::move(fields);
    line["friends"] = Json::array();
    for (const auto& f : p.friends) line["friends"].push_back(f.str());
    line["communities"] = Json::array();
    for (const auto& c : p.communities) line["communities"].push_back(c.str());
    out << line.dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
  }
}

void WriteSnapshot(const SocialGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write snapshot: " + path.string());
  WriteSnapshot(g, out);
  out.flush();
  if (!out) throw Error("failed writing snapshot: " + path.string());
}

namespace {

std::string RequireString(const Json& v, std::size_t line_no,
                          std::string_view what) {
  if (!v.is_string()) {
    throw ParseError(line_no, std::string(what) + " must be a string");
  }
  return v.get<std::string>();
}

template <typename Id>
std::vector<Id> ParseIdArray(const Json& v, std::size_t line_no,
                             std::string_view what) {
  if (!v.is_array()) {
    throw ParseError(line_no, std::string(what) + " must be an array");
  }
  std::vector<Id> out;
  std::unordered_set<std::string> seen;
  for (const auto& item : v) {
    const std::string text = RequireString(item, line_no, what);
    const auto id = Id::Parse(text);
    if (!id) {
      throw ParseError(line_no, "invalid id \"" + text + "\" in " +
                                    std::string(what));
    }
    if (!seen.insert(text).second) {
      throw ParseError(line_no, "repeated id " + text + " in " +
                                    std::string(what));
    }
    out.push_back(*id);
  }
  return out;
}

UserProfile ParseSnapshotLine(std::string_view line, std::size_t line_no) {
  Json doc;
  try {
    doc = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw ParseError(line_no, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(line_no, "record must be an object");
  for (const auto& [member, _] : doc.items()) {
    if (member != "id" && member != "name" && member != "fields" &&
        member != "friends" && member != "communities") {
      throw ParseError(line_no, "unknown member \"" + member + "\"");
    }
  }
  if (!doc.contains("id")) throw ParseError(line_no, "missing \"id\"");
  const std::string id_text = RequireString(doc["id"], line_no, "id");
  const auto id = ProfileId::Parse(id_text);
  if (!id) throw ParseError(line_no, "invalid id \"" + id_text + "\"");

  UserProfile p{.id = *id,
                .display_name = {},
                .fields = {},
                .friends = {},
                .communities = {}};
  if (doc.contains("name")) {
    p.display_name = RequireString(doc["name"], line_no, "name");
  }
  if (doc.contains("fields")) {
    const Json& fields = doc["fields"];
    if (!fields.is_object()) throw ParseError(line_no, "fields must be an object");
    for (const auto& [key, value] : fields.items()) {
      const auto field = ParseFieldName(key);
      if (!field) {
        throw ParseError(line_no, "unknown field key \"" + key + "\"");
      }
      std::string text = RequireString(value, line_no, "field value");
      if (text.empty() || NormalizeValue(text) != text) {
        throw ParseError(line_no, "non-canonical value for " + key);
      }
      p.fields.emplace(*field, std::move(text));
    }
  }
  if (doc.contains("friends")) {
    p.friends = ParseIdArray<ProfileId>(doc["friends"], line_no, "friends");
    if (std::find(p.friends.begin(), p.friends.end(), p.id) != p.friends.end()) {
      throw ParseError(line_no, "profile lists itself as a friend");
    }
  }
  if (doc.contains("communities")) {
    p.communities =
        ParseIdArray<CommunityId>(doc["communities"], line_no, "communities");
  }
  return p;
}

}  // namespace

SocialGraph ParseSnapshot(std::istream& in) {
  std::vector<UserProfile> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    records.push_back(ParseSnapshotLine(line, line_no));
  }
  return SocialGraph::Build(std::move(records));
}

SocialGraph ReadSnapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read snapshot: " + path.string());
  return ParseSnapshot(in);
}

}  // namespace pla
