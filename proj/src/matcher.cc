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

#include "pla/matcher.h"

#include <algorithm>

#include "pla/errors.h"

namespace pla {
namespace {

const UserProfile& RequireBase(const SocialGraph& g, const ProfileId& base) {
  const UserProfile* p = g.Find(base);
  if (p == nullptr) throw UnknownProfile(base.str());
  return *p;
}

void CheckConfig(const MutualWeightConfig& cfg) {
  if (cfg.mode == MutualMode::kWafScaled && cfg.waf == 0) {
    throw InvalidConfig("waf must be at least 1");
  }
}

std::uint32_t ScaleByWaf(std::size_t mutual, std::size_t total,
                         std::uint32_t waf) {
  // round(mutual / total * waf), halves rounded up, in integers.
  const std::uint64_t num = 2 * static_cast<std::uint64_t>(mutual) * waf + total;
  return static_cast<std::uint32_t>(num / (2 * static_cast<std::uint64_t>(total)));
}

}  // namespace

std::uint8_t MatchRow::indicator(FieldKey f) const {
  for (const auto& [field, bit] : indicators) {
    if (field == f) return bit;
  }
  return 0;
}

std::uint32_t SimilarityReport::category_score(Category c) const {
  switch (c) {
    case Category::kContact:
      return contact;
    case Category::kPersonal:
      return personal;
    case Category::kInterest:
      return interest;
    case Category::kEducationalProfessional:
      return education_professional;
  }
  return 0;
}

std::uint8_t FieldMatch(std::optional<std::string_view> a,
                        std::optional<std::string_view> b) {
  return a && b && *a == *b ? 1 : 0;
}

MatchRow CategoryRow(const SocialGraph& g, const ProfileId& base,
                     const ProfileId& candidate, Category category,
                     const WeightScheme& scheme) {
  const UserProfile& b = RequireBase(g, base);
  const UserProfile* c = g.Find(candidate);
  MatchRow row{.candidate = candidate,
               .category = category,
               .indicators = {},
               .weighted_total = 0};
  for (FieldKey f : FieldsOf(category)) {
    const std::uint8_t bit =
        c == nullptr ? 0 : FieldMatch(b.field(f), c->field(f));
    row.indicators.emplace_back(f, bit);
    row.weighted_total += bit * scheme.weight(f);
  }
  return row;
}

MatchingMatrix BuildMatchingMatrix(const SocialGraph& g, const ProfileId& base,
                                   Category category,
                                   const WeightScheme& scheme) {
  const UserProfile& b = RequireBase(g, base);
  MatchingMatrix m{.category = category, .scheme_kind = scheme.kind(), .rows = {}};
  m.rows.reserve(b.friends.size());
  for (const auto& f : b.friends) {
    m.rows.push_back(CategoryRow(g, base, f, category, scheme));
  }
  return m;
}

std::uint32_t MutualFriendWeight(const SocialGraph& g, const ProfileId& base,
                                 const ProfileId& candidate,
                                 const MutualWeightConfig& cfg) {
  CheckConfig(cfg);
  const UserProfile& b = RequireBase(g, base);
  const std::size_t mutual = MutualFriends(g, base, candidate).size();
  if (cfg.mode == MutualMode::kRawCount) {
    return static_cast<std::uint32_t>(mutual);
  }
  if (b.friends.empty()) throw DegenerateBase(base.str(), "friends");
  return ScaleByWaf(mutual, b.friends.size(), cfg.waf);
}

std::uint32_t MutualCommunityWeight(const SocialGraph& g, const ProfileId& base,
                                    const ProfileId& candidate,
                                    const MutualWeightConfig& cfg) {
  CheckConfig(cfg);
  const UserProfile& b = RequireBase(g, base);
  const std::size_t mutual = MutualCommunities(g, base, candidate).size();
  if (cfg.mode == MutualMode::kRawCount) {
    return static_cast<std::uint32_t>(mutual);
  }
  if (b.communities.empty()) throw DegenerateBase(base.str(), "communities");
  return ScaleByWaf(mutual, b.communities.size(), cfg.waf);
}

SimilarityReport TotalSimilarity(const SocialGraph& g, const ProfileId& base,
                                 const ProfileId& candidate,
                                 const WeightScheme& scheme,
                                 const MutualWeightConfig& cfg) {
  SimilarityReport r{.candidate = candidate};
  auto score = [&](Category c) {
    return CategoryRow(g, base, candidate, c, scheme).weighted_total;
  };
  r.contact = score(Category::kContact);
  r.personal = score(Category::kPersonal);
  r.interest = score(Category::kInterest);
  r.education_professional = score(Category::kEducationalProfessional);
  r.mutual_friend_weight = MutualFriendWeight(g, base, candidate, cfg);
  r.mutual_community_weight = MutualCommunityWeight(g, base, candidate, cfg);
  r.total = r.contact + r.personal + r.interest + r.education_professional +
            r.mutual_friend_weight + r.mutual_community_weight;
  return r;
}

std::vector<SimilarityReport> ScoreFriends(const SocialGraph& g,
                                           const ProfileId& base,
                                           const WeightScheme& scheme,
                                           const MutualWeightConfig& cfg) {
  const UserProfile& b = RequireBase(g, base);
  std::vector<SimilarityReport> out;
  out.reserve(b.friends.size());
  for (const auto& f : b.friends) {
    out.push_back(TotalSimilarity(g, base, f, scheme, cfg));
  }
  return out;
}

std::vector<SimilarityReport> RankCandidates(const SocialGraph& g,
                                             const ProfileId& base,
                                             const WeightScheme& scheme,
                                             const MutualWeightConfig& cfg) {
  auto out = ScoreFriends(g, base, scheme, cfg);
  std::sort(out.begin(), out.end(),
            [](const SimilarityReport& a, const SimilarityReport& b) {
              if (a.total != b.total) return a.total > b.total;
              return a.candidate < b.candidate;
            });
  return out;
}

}  // namespace pla
