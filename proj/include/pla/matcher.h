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

#ifndef PLA_MATCHER_H_
#define PLA_MATCHER_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pla/fields.h"
#include "pla/ids.h"
#include "pla/social_graph.h"
#include "pla/weights.h"

namespace pla {

// One candidate's 0/1 indicators over the fields of a single category, in
// FieldsOf(category) order, and their weighted sum.
struct MatchRow {
  ProfileId candidate;
  Category category;
  std::vector<std::pair<FieldKey, std::uint8_t>> indicators;
  std::uint32_t weighted_total = 0;

  // 0 for fields outside the row's category.
  std::uint8_t indicator(FieldKey f) const;

  friend bool operator==(const MatchRow&, const MatchRow&) = default;
};

// Rows follow the base profile's friend-list order.
struct MatchingMatrix {
  Category category;
  SchemeKind scheme_kind;
  std::vector<MatchRow> rows;
};

enum class MutualMode { kRawCount, kWafScaled };

// `waf` caps WafScaled weights; it is ignored in RawCount mode.
struct MutualWeightConfig {
  MutualMode mode = MutualMode::kRawCount;
  std::uint32_t waf = 10;
};

struct SimilarityReport {
  ProfileId candidate;
  std::uint32_t contact = 0;
  std::uint32_t personal = 0;
  std::uint32_t interest = 0;
  std::uint32_t education_professional = 0;
  std::uint32_t mutual_friend_weight = 0;
  std::uint32_t mutual_community_weight = 0;
  std::uint32_t total = 0;

  std::uint32_t category_score(Category c) const;

  friend bool operator==(const SimilarityReport&,
                         const SimilarityReport&) = default;
};

// 1 iff both values are present and equal. Two missing values do not match.
std::uint8_t FieldMatch(std::optional<std::string_view> a,
                        std::optional<std::string_view> b);

// Throws UnknownProfile when `base` is not ingested. Stub candidates give
// an all-zero row.
MatchRow CategoryRow(const SocialGraph& g, const ProfileId& base,
                     const ProfileId& candidate, Category category,
                     const WeightScheme& scheme);

MatchingMatrix BuildMatchingMatrix(const SocialGraph& g, const ProfileId& base,
                                   Category category,
                                   const WeightScheme& scheme);

// RawCount: |mutual friends|. WafScaled: round-half-up of
// |mutual| / |friends(base)| * waf, never above waf. Throws DegenerateBase
// in WafScaled mode when the base has no friends, InvalidConfig for waf 0.
std::uint32_t MutualFriendWeight(const SocialGraph& g, const ProfileId& base,
                                 const ProfileId& candidate,
                                 const MutualWeightConfig& cfg);

// Same shape over community memberships.
std::uint32_t MutualCommunityWeight(const SocialGraph& g, const ProfileId& base,
                                    const ProfileId& candidate,
                                    const MutualWeightConfig& cfg);

// Sum of the four category totals and both mutual weights.
SimilarityReport TotalSimilarity(const SocialGraph& g, const ProfileId& base,
                                 const ProfileId& candidate,
                                 const WeightScheme& scheme,
                                 const MutualWeightConfig& cfg);

// One report per friend of `base`, in friend-list order.
std::vector<SimilarityReport> ScoreFriends(const SocialGraph& g,
                                           const ProfileId& base,
                                           const WeightScheme& scheme,
                                           const MutualWeightConfig& cfg);

// ScoreFriends sorted by total descending, ties by ascending candidate id.
std::vector<SimilarityReport> RankCandidates(const SocialGraph& g,
                                             const ProfileId& base,
                                             const WeightScheme& scheme,
                                             const MutualWeightConfig& cfg);

}  // namespace pla

#endif  // PLA_MATCHER_H_
