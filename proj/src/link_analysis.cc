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

#include "pla/link_analysis.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <unordered_map>

#include "pla/errors.h"
#include "pla/fields.h"

namespace pla {
namespace {

// BFS from `from` to `to`. When `skip_direct` is set the edge from -> to is
// not followed.
Distance ShortestPath(const SocialGraph& g, const ProfileId& from,
                      const ProfileId& to, bool skip_direct) {
  std::unordered_map<ProfileId, std::uint32_t> dist;
  std::deque<ProfileId> queue;
  dist.emplace(from, 0);
  queue.push_back(from);
  while (!queue.empty()) {
    const ProfileId x = queue.front();
    queue.pop_front();
    const std::uint32_t d = dist.at(x);
    for (const ProfileId& y : g.OutNeighbors(x)) {
      if (skip_direct && x == from && y == to) continue;
      if (dist.contains(y)) continue;
      if (y == to) return Distance::Finite(d + 1);
      dist.emplace(y, d + 1);
      queue.push_back(y);
    }
  }
  return Distance::Unreachable();
}

std::set<std::string> InterestItems(const SocialGraph& g, const ProfileId& id,
                                    InterestSource source) {
  std::set<std::string> items;
  const UserProfile* p = g.Find(id);
  if (p == nullptr) return items;
  for (const auto& c : p->communities) items.insert("community:" + c.str());
  if (source == InterestSource::kCommunitiesAndInterestFields) {
    for (FieldKey f : FieldsOf(Category::kInterest)) {
      if (auto value = p->field(f)) {
        items.insert(std::string(FieldName(f)) + ":" + std::string(*value));
      }
    }
  }
  return items;
}

}  // namespace

std::string Distance::ToString() const {
  return is_finite() ? std::to_string(hops_) : "inf";
}

Degrees DegreesOf(const SocialGraph& g, const ProfileId& u) {
  return {.in = g.InNeighbors(u).size(), .out = g.OutNeighbors(u).size()};
}

Distance ForwardDeletedDistance(const SocialGraph& g, const ProfileId& u,
                                const ProfileId& v) {
  if (u == v) throw InvalidPair(u.str());
  return ShortestPath(g, u, v, /*skip_direct=*/true);
}

Distance BackwardDistance(const SocialGraph& g, const ProfileId& u,
                          const ProfileId& v) {
  if (u == v) throw InvalidPair(u.str());
  return ShortestPath(g, v, u, /*skip_direct=*/false);
}

InterestFeatures ComputeInterestFeatures(const SocialGraph& g,
                                         const ProfileId& u, const ProfileId& v,
                                         InterestSource source) {
  if (u == v) throw InvalidPair(u.str());
  const auto a = InterestItems(g, u, source);
  const auto b = InterestItems(g, v, source);
  InterestFeatures out;
  out.interests_u = a.size();
  out.interests_v = b.size();
  out.mutual = static_cast<std::size_t>(
      std::count_if(a.begin(), a.end(),
                    [&b](const std::string& item) { return b.contains(item); }));
  // A zero denominator is an empty interest list, not an error.
  out.ratio_u = a.empty() ? Ratio{} : Ratio{out.mutual, out.interests_u};
  out.ratio_v = b.empty() ? Ratio{} : Ratio{out.mutual, out.interests_v};
  return out;
}

PathMetrics ComputePathMetrics(const SocialGraph& g,
                               std::span<const ProfileId> path) {
  if (path.empty()) throw Error("path must contain at least one node");
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.HasEdge(path[i - 1], path[i])) {
      throw InvalidPath(path[i - 1].str(), path[i].str());
    }
  }
  const std::size_t edges = path.size() - 1;
  return {.path_length = edges, .hop_count = edges == 0 ? 0 : edges - 1};
}

FeatureVector ComputeFeatureVector(const SocialGraph& g, const ProfileId& u,
                                   const ProfileId& v, InterestSource source) {
  if (u == v) throw InvalidPair(u.str());
  const Degrees du = DegreesOf(g, u);
  const Degrees dv = DegreesOf(g, v);
  FeatureVector fv;
  fv.in_u = du.in;
  fv.in_v = dv.in;
  fv.out_u = du.out;
  fv.out_v = dv.out;
  fv.mutual_friends = MutualFriends(g, u, v).size();
  fv.forward_deleted_distance = ForwardDeletedDistance(g, u, v);
  fv.backward_distance = BackwardDistance(g, u, v);
  fv.interests = ComputeInterestFeatures(g, u, v, source);
  return fv;
}

double UniquenessSimilarity(const SocialGraph& g, const ProfileId& a,
                            const ProfileId& b) {
  if (a == b) throw InvalidPair(a.str());
  const UserProfile* pa = g.Find(a);
  const UserProfile* pb = g.Find(b);
  if (pa == nullptr || pb == nullptr) return 0.0;
  const auto items_b = ProfileItems(*pb);
  const std::set<std::string> other(items_b.begin(), items_b.end());
  double sum = 0.0;
  for (const auto& item : ProfileItems(*pa)) {
    if (!other.contains(item)) continue;
    // Both a and b hold the item, so its frequency is at least 2.
    sum += 1.0 / std::log(static_cast<double>(g.ItemFrequency(item)));
  }
  return sum;
}

}  // namespace pla
