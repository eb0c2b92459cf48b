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

#ifndef PLA_SOCIAL_GRAPH_H_
#define PLA_SOCIAL_GRAPH_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pla/fields.h"
#include "pla/ids.h"

namespace pla {

// One user's home page: identity, canonical field values, friend list and
// community memberships. A missing key in `fields` means "not provided".
struct UserProfile {
  ProfileId id;
  std::string display_name;
  std::map<FieldKey, std::string> fields;
  std::vector<ProfileId> friends;
  std::vector<CommunityId> communities;

  std::optional<std::string_view> field(FieldKey f) const;

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

// Items used for inverse-log-frequency similarity: "community:<id>" for each
// membership and "<field_key>:<value>" for each provided field.
std::vector<std::string> ProfileItems(const UserProfile& p);

// Immutable snapshot of ingested profiles. Edge u->v exists iff v is in
// u's friend list. Friend ids with no ingested profile are stubs: valid
// edge targets with no fields, no communities and out-degree 0.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Throws DuplicateProfile or InvalidProfile.
  static SocialGraph Build(std::vector<UserProfile> records);

  // Profiles sorted by id.
  const std::vector<UserProfile>& profiles() const { return profiles_; }
  std::size_t size() const { return profiles_.size(); }
  bool empty() const { return profiles_.empty(); }

  // nullptr for stubs and unknown ids.
  const UserProfile* Find(const ProfileId& id) const;
  bool Contains(const ProfileId& id) const { return Find(id) != nullptr; }

  std::span<const ProfileId> OutNeighbors(const ProfileId& u) const;
  // Sources of edges into u, in ascending id order.
  std::span<const ProfileId> InNeighbors(const ProfileId& u) const;
  bool HasEdge(const ProfileId& u, const ProfileId& v) const;

  std::size_t edge_count() const { return edge_count_; }
  // Number of ingested profiles possessing the item (see ProfileItems).
  std::size_t ItemFrequency(std::string_view item) const;

  friend bool operator==(const SocialGraph& a, const SocialGraph& b) {
    return a.profiles_ == b.profiles_;
  }

 private:
  std::vector<UserProfile> profiles_;
  std::unordered_map<ProfileId, std::size_t> index_;
  std::unordered_map<ProfileId, std::vector<ProfileId>> in_;
  std::unordered_map<std::string, std::size_t> item_frequency_;
  std::size_t edge_count_ = 0;
};

inline SocialGraph BuildSnapshot(std::vector<UserProfile> records) {
  return SocialGraph::Build(std::move(records));
}

// Friend list of u in ingestion order; empty for stubs and unknown ids.
std::vector<ProfileId> OutNeighbors(const SocialGraph& g, const ProfileId& u);

// { w : u->w and w->v }. Throws InvalidPair when u == v.
std::set<ProfileId> MutualFriends(const SocialGraph& g, const ProfileId& u,
                                  const ProfileId& v);

// Intersection of the two membership lists. Throws InvalidPair when u == v.
std::set<CommunityId> MutualCommunities(const SocialGraph& g,
                                        const ProfileId& u,
                                        const ProfileId& v);

}  // namespace pla

#endif  // PLA_SOCIAL_GRAPH_H_
