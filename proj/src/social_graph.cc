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

#include "pla/social_graph.h"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "pla/errors.h"

namespace pla {

std::optional<std::string_view> UserProfile::field(FieldKey f) const {
  const auto it = fields.find(f);
  if (it == fields.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::vector<std::string> ProfileItems(const UserProfile& p) {
  std::vector<std::string> items;
  items.reserve(p.communities.size() + p.fields.size());
  for (const auto& c : p.communities) items.push_back("community:" + c.str());
  for (const auto& [key, value] : p.fields) {
    items.push_back(std::string(FieldName(key)) + ":" + value);
  }
  return items;
}

namespace {

void CheckInvariants(const UserProfile& p) {
  std::unordered_set<ProfileId> seen_friends;
  for (const auto& f : p.friends) {
    if (f == p.id) throw InvalidProfile(p.id.str(), "lists itself as a friend");
    if (!seen_friends.insert(f).second) {
      throw InvalidProfile(p.id.str(), "friend " + f.str() + " listed twice");
    }
  }
  std::unordered_set<CommunityId> seen_communities;
  for (const auto& c : p.communities) {
    if (!seen_communities.insert(c).second) {
      throw InvalidProfile(p.id.str(), "community " + c.str() + " listed twice");
    }
  }
  for (const auto& [key, value] : p.fields) {
    if (value.empty()) {
      throw InvalidProfile(p.id.str(),
                           "empty value for " + std::string(FieldName(key)));
    }
  }
}

}  // namespace

SocialGraph SocialGraph::Build(std::vector<UserProfile> records) {
  SocialGraph g;
  std::sort(records.begin(), records.end(),
            [](const UserProfile& a, const UserProfile& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].id == records[i - 1].id) {
      throw DuplicateProfile(records[i].id.str());
    }
  }
  for (const auto& p : records) CheckInvariants(p);

  g.profiles_ = std::move(records);
  g.index_.reserve(g.profiles_.size());
  for (std::size_t i = 0; i < g.profiles_.size(); ++i) {
    const UserProfile& p = g.profiles_[i];
    g.index_.emplace(p.id, i);
    // Profiles are visited in id order, so every in-list ends up sorted.
    for (const auto& f : p.friends) g.in_[f].push_back(p.id);
    g.edge_count_ += p.friends.size();
    for (auto& item : ProfileItems(p)) ++g.item_frequency_[std::move(item)];
  }
  return g;
}

const UserProfile* SocialGraph::Find(const ProfileId& id) const {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &profiles_[it->second];
}

std::span<const ProfileId> SocialGraph::OutNeighbors(const ProfileId& u) const {
  const UserProfile* p = Find(u);
  if (p == nullptr) return {};
  return p->friends;
}

std::span<const ProfileId> SocialGraph::InNeighbors(const ProfileId& u) const {
  const auto it = in_.find(u);
  if (it == in_.end()) return {};
  return it->second;
}

bool SocialGraph::HasEdge(const ProfileId& u, const ProfileId& v) const {
  const auto out = OutNeighbors(u);
  return std::find(out.begin(), out.end(), v) != out.end();
}

std::size_t SocialGraph::ItemFrequency(std::string_view item) const {
  const auto it = item_frequency_.find(std::string(item));
  return it == item_frequency_.end() ? 0 : it->second;
}

std::vector<ProfileId> OutNeighbors(const SocialGraph& g, const ProfileId& u) {
  const auto out = g.OutNeighbors(u);
  return {out.begin(), out.end()};
}

std::set<ProfileId> MutualFriends(const SocialGraph& g, const ProfileId& u,
                                  const ProfileId& v) {
  if (u == v) throw InvalidPair(u.str());
  std::set<ProfileId> out;
  for (const auto& w : g.OutNeighbors(u)) {
    if (g.HasEdge(w, v)) out.insert(w);
  }
  return out;
}

std::set<CommunityId> MutualCommunities(const SocialGraph& g,
                                        const ProfileId& u,
                                        const ProfileId& v) {
  if (u == v) throw InvalidPair(u.str());
  const UserProfile* a = g.Find(u);
  const UserProfile* b = g.Find(v);
  if (a == nullptr || b == nullptr) return {};
  const std::set<CommunityId> mine(a->communities.begin(), a->communities.end());
  std::set<CommunityId> out;
  for (const auto& c : b->communities) {
    if (mine.contains(c)) out.insert(c);
  }
  return out;
}

}  // namespace pla
