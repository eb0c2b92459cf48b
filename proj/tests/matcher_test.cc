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

#include <algorithm>
#include <map>
#include <random>

#include "gtest/gtest.h"
#include "pla/errors.h"
#include "pla/matcher.h"
#include "support/test_support.h"

namespace pla {
namespace {

using ::pla::testing::kBaseId;
using ::pla::testing::kCandidateIds;
using ::pla::testing::NodeId;

class FixtureTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    graph_ = new SocialGraph(testing::LoadFixtureGraph());
  }
  static void TearDownTestSuite() {
    delete graph_;
    graph_ = nullptr;
  }
  const SocialGraph& g() const { return *graph_; }

  static SocialGraph* graph_;
};

SocialGraph* FixtureTest::graph_ = nullptr;

template <std::size_t N>
void ExpectMatrix(const MatchingMatrix& m,
                  const std::array<std::array<int, N>, 9>& cells,
                  const std::array<int, 9>& totals) {
  ASSERT_EQ(m.rows.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    const MatchRow& row = m.rows[r];
    EXPECT_EQ(row.candidate.str(), kCandidateIds[r]);
    ASSERT_EQ(row.indicators.size(), N);
    for (std::size_t c = 0; c < N; ++c) {
      EXPECT_EQ(row.indicators[c].second, cells[r][c])
          << CategoryName(m.category) << " row " << r << " column "
          << FieldName(row.indicators[c].first);
    }
    EXPECT_EQ(row.weighted_total, static_cast<std::uint32_t>(totals[r]))
        << CategoryName(m.category) << " row " << r;
  }
}

TEST(FieldMatchTest, Rules) {
  EXPECT_EQ(FieldMatch("bhopal", "bhopal"), 1);
  EXPECT_EQ(FieldMatch("bhopal", "indore"), 0);
  EXPECT_EQ(FieldMatch(std::nullopt, "bhopal"), 0);
  EXPECT_EQ(FieldMatch("bhopal", std::nullopt), 0);
  EXPECT_EQ(FieldMatch(std::nullopt, std::nullopt), 0);
}

TEST_F(FixtureTest, ContactRowDevvrit) {
  const ProfileId devvrit("1138302238349976680");
  const MatchRow binary =
      CategoryRow(g(), kBaseId, devvrit, Category::kContact, BinaryScheme());
  for (const auto& [f, bit] : binary.indicators) EXPECT_EQ(bit, 1) << FieldName(f);
  EXPECT_EQ(binary.weighted_total, 5u);
  EXPECT_EQ(CategoryRow(g(), kBaseId, devvrit, Category::kContact,
                        HierarchyScheme())
                .weighted_total,
            13u);
}

TEST_F(FixtureTest, ContactRowAkhtar) {
  const MatchRow row = CategoryRow(g(), kBaseId, ProfileId("18172151621177275498"),
                                   Category::kContact, BinaryScheme());
  EXPECT_EQ(row.indicator(FieldKey::kHometown), 0);
  EXPECT_EQ(row.indicator(FieldKey::kPinCode), 0);
  EXPECT_EQ(row.indicator(FieldKey::kCity), 0);
  EXPECT_EQ(row.indicator(FieldKey::kState), 0);
  EXPECT_EQ(row.indicator(FieldKey::kCountry), 1);
  EXPECT_EQ(row.weighted_total, 1u);
}

TEST_F(FixtureTest, UnknownBase) {
  EXPECT_THROW(CategoryRow(g(), ProfileId("1"), kBaseId, Category::kContact,
                           BinaryScheme()),
               UnknownProfile);
  EXPECT_THROW(BuildMatchingMatrix(g(), ProfileId("1"), Category::kContact,
                                   BinaryScheme()),
               UnknownProfile);
  EXPECT_THROW(RankCandidates(g(), ProfileId("1"), BinaryScheme(), {}),
               UnknownProfile);
}

TEST_F(FixtureTest, StubCandidateRowIsZero) {
  const ProfileId stub("12760208310579966367");
  for (Category c : kAllCategories) {
    const MatchRow row = CategoryRow(g(), kBaseId, stub, c, BinaryScheme());
    for (const auto& [f, bit] : row.indicators) EXPECT_EQ(bit, 0);
    EXPECT_EQ(row.weighted_total, 0u);
  }
  // The base reaches the stub through one friend, so only that term is set.
  const SimilarityReport r = TotalSimilarity(g(), kBaseId, stub, BinaryScheme(), {});
  EXPECT_EQ(r.mutual_friend_weight, 1u);
  EXPECT_EQ(r.mutual_community_weight, 0u);
  EXPECT_EQ(r.total, 1u);
}

TEST_F(FixtureTest, BinaryMatricesReproduceCellForCell) {
  const WeightScheme s = BinaryScheme();
  ExpectMatrix(BuildMatchingMatrix(g(), kBaseId, Category::kContact, s),
               testing::kContactCells, testing::kContactTotals);
  ExpectMatrix(BuildMatchingMatrix(g(), kBaseId, Category::kPersonal, s),
               testing::kPersonalCells, testing::kPersonalTotals);
  ExpectMatrix(BuildMatchingMatrix(g(), kBaseId, Category::kInterest, s),
               testing::kInterestCells, testing::kInterestTotals);
  ExpectMatrix(
      BuildMatchingMatrix(g(), kBaseId, Category::kEducationalProfessional, s),
      testing::kEducationCells, testing::kEducationTotals);
}

TEST_F(FixtureTest, MutualColumnsRawCount) {
  for (std::size_t r = 0; r < 9; ++r) {
    const ProfileId cand(kCandidateIds[r]);
    EXPECT_EQ(MutualFriendWeight(g(), kBaseId, cand, {}),
              static_cast<std::uint32_t>(testing::kMutualFriends[r]));
    EXPECT_EQ(MutualCommunityWeight(g(), kBaseId, cand, {}),
              static_cast<std::uint32_t>(testing::kMutualCommunities[r]));
  }
}

TEST_F(FixtureTest, BinaryResultMatrix) {
  const auto reports = ScoreFriends(g(), kBaseId, BinaryScheme(), {});
  ASSERT_EQ(reports.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    EXPECT_EQ(reports[r].total,
              static_cast<std::uint32_t>(testing::kBinaryTotals[r]))
        << kCandidateIds[r];
  }
  const SimilarityReport nilesh = TotalSimilarity(
      g(), kBaseId, ProfileId("548768002074853061"), BinaryScheme(), {});
  EXPECT_EQ(nilesh.contact, 3u);
  EXPECT_EQ(nilesh.personal, 3u);
  EXPECT_EQ(nilesh.interest, 1u);
  EXPECT_EQ(nilesh.education_professional, 2u);
  EXPECT_EQ(nilesh.mutual_friend_weight, 2u);
  EXPECT_EQ(nilesh.mutual_community_weight, 3u);
  EXPECT_EQ(nilesh.total, 14u);
}

TEST_F(FixtureTest, HierarchyResultMatrix) {
  const auto reports = ScoreFriends(g(), kBaseId, HierarchyScheme(), {});
  ASSERT_EQ(reports.size(), 9u);
  for (std::size_t r = 0; r < 9; ++r) {
    EXPECT_EQ(reports[r].contact,
              static_cast<std::uint32_t>(testing::kHierarchyContact[r]));
    EXPECT_EQ(reports[r].education_professional,
              static_cast<std::uint32_t>(testing::kHierarchyEducation[r]));
    EXPECT_EQ(reports[r].personal,
              static_cast<std::uint32_t>(testing::kPersonalTotals[r]));
    EXPECT_EQ(reports[r].interest,
              static_cast<std::uint32_t>(testing::kInterestTotals[r]));
    EXPECT_EQ(reports[r].total,
              static_cast<std::uint32_t>(testing::kHierarchyTotals[r]));
  }
  const SimilarityReport devvrit = reports[2];
  EXPECT_EQ(devvrit.total, 13u + 4 + 1 + 0 + 3 + 0);
}

TEST_F(FixtureTest, RankingTopCandidates) {
  const auto binary = RankCandidates(g(), kBaseId, BinaryScheme(), {});
  ASSERT_EQ(binary.size(), 9u);
  EXPECT_EQ(binary[0].candidate.str(), "548768002074853061");
  EXPECT_EQ(binary[0].total, 14u);
  const auto hierarchy = RankCandidates(g(), kBaseId, HierarchyScheme(), {});
  EXPECT_EQ(hierarchy[0].candidate.str(), "1138302238349976680");
  EXPECT_EQ(hierarchy[0].total, 21u);
}

TEST_F(FixtureTest, RankingTieBreakByIdText) {
  // Binary totals 13 tie between 1138302238349976680 and
  // 17025547829036588771; text order puts "113..." first.
  const auto binary = RankCandidates(g(), kBaseId, BinaryScheme(), {});
  EXPECT_EQ(binary[1].candidate.str(), "1138302238349976680");
  EXPECT_EQ(binary[2].candidate.str(), "17025547829036588771");
  for (std::size_t i = 1; i < binary.size(); ++i) {
    EXPECT_TRUE(binary[i - 1].total > binary[i].total ||
                (binary[i - 1].total == binary[i].total &&
                 binary[i - 1].candidate < binary[i].candidate));
  }
}

UserProfile Bare(const std::string& id, std::vector<std::string> friends = {},
                 std::vector<std::string> communities = {}) {
  UserProfile p{.id = ProfileId(id)};
  for (auto& f : friends) p.friends.emplace_back(f);
  for (auto& c : communities) p.communities.emplace_back(c);
  return p;
}

TEST(MatcherTest, BaseWithoutFriends) {
  const SocialGraph g = BuildSnapshot({Bare("1")});
  EXPECT_TRUE(
      BuildMatchingMatrix(g, ProfileId("1"), Category::kContact, BinaryScheme())
          .rows.empty());
  EXPECT_TRUE(RankCandidates(g, ProfileId("1"), BinaryScheme(), {}).empty());
}

TEST(MutualWeightTest, WafScaling) {
  // Base 1 has six friends; 2 is reached from three of them.
  const SocialGraph g = BuildSnapshot(
      {Bare("1", {"2", "3", "4", "5", "6", "7"}, {"10", "11"}),
       Bare("3", {"2"}), Bare("4", {"2"}), Bare("5", {"2"}),
       Bare("2", {}, {"10", "11"})});
  const MutualWeightConfig waf{.mode = MutualMode::kWafScaled, .waf = 10};
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"), {}), 3u);
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"), waf), 5u);
  EXPECT_EQ(MutualCommunityWeight(g, ProfileId("1"), ProfileId("2"), waf), 10u);
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("7"), waf), 0u);
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("7"), {}), 0u);
  EXPECT_EQ(MutualCommunityWeight(g, ProfileId("1"), ProfileId("7"), waf), 0u);
}

TEST(MutualWeightTest, RoundHalfUp) {
  // 1 of 4 friends, waf 2 -> 0.5 -> 1; 1 of 3, waf 1 -> 0.33 -> 0.
  const SocialGraph g = BuildSnapshot(
      {Bare("1", {"2", "3", "4", "5"}), Bare("3", {"2"}),
       Bare("6", {"7", "8", "9"}), Bare("7", {"8"})});
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"),
                               {.mode = MutualMode::kWafScaled, .waf = 2}),
            1u);
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("6"), ProfileId("8"),
                               {.mode = MutualMode::kWafScaled, .waf = 1}),
            0u);
}

TEST(MutualWeightTest, DegenerateBase) {
  const SocialGraph g = BuildSnapshot({Bare("1"), Bare("2")});
  const MutualWeightConfig waf{.mode = MutualMode::kWafScaled, .waf = 10};
  EXPECT_THROW(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"), waf),
               DegenerateBase);
  EXPECT_THROW(MutualCommunityWeight(g, ProfileId("1"), ProfileId("2"), waf),
               DegenerateBase);
  EXPECT_EQ(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"), {}), 0u);
  const SocialGraph has_friend = BuildSnapshot({Bare("1", {"2"})});
  EXPECT_THROW(
      TotalSimilarity(has_friend, ProfileId("1"), ProfileId("2"), BinaryScheme(), waf),
      DegenerateBase);
}

TEST(MutualWeightTest, ZeroWafRejected) {
  const SocialGraph g = BuildSnapshot({Bare("1", {"2"}, {"5"})});
  EXPECT_THROW(MutualFriendWeight(g, ProfileId("1"), ProfileId("2"),
                                  {.mode = MutualMode::kWafScaled, .waf = 0}),
               InvalidConfig);
}

// Random base-centred graphs with field values drawn from a tiny vocabulary
// so that matches are frequent.
SocialGraph RandomScoringGraph(std::mt19937& rng, std::size_t friends) {
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<int> value(0, 2);
  std::vector<UserProfile> profiles;
  UserProfile base{.id = NodeId(0)};
  for (std::size_t i = 1; i <= friends; ++i) base.friends.push_back(NodeId(i));
  profiles.push_back(base);
  for (std::size_t i = 0; i <= friends + 1; ++i) {
    UserProfile& p = i == 0 ? profiles[0]
                            : profiles.emplace_back(UserProfile{.id = NodeId(i)});
    for (FieldKey f : kAllFields) {
      if (coin(rng)) p.fields[f] = "v" + std::to_string(value(rng));
    }
    for (int c = 0; c < 5; ++c) {
      if (coin(rng)) p.communities.emplace_back(std::to_string(c + 1));
    }
    if (i == 0) continue;
    for (std::size_t j = 0; j <= friends + 2; ++j) {
      if (j != i && coin(rng)) p.friends.push_back(NodeId(j));
    }
  }
  return BuildSnapshot(std::move(profiles));
}

TEST(MatcherPropertyTest, MaskMonotonicity) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, kFieldCount - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const SocialGraph g = RandomScoringGraph(rng, 6);
    const WeightScheme before =
        trial % 2 == 0 ? BinaryScheme() : HierarchyScheme();
    const FieldKey f = kAllFields[pick(rng)];
    const std::uint32_t lowered = before.weight(f) == 0 ? 0 : before.weight(f) - 1;
    const WeightScheme after = before.WithOverrides({{f, lowered}});
    const auto a = ScoreFriends(g, NodeId(0), before, {});
    const auto b = ScoreFriends(g, NodeId(0), after, {});
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(b[i].total, a[i].total);
  }
}

TEST(MatcherPropertyTest, AllZeroWeightsLeaveOnlyMutualWeights) {
  std::mt19937 rng(32);
  std::map<FieldKey, bool> mask;
  for (FieldKey f : kAllFields) mask[f] = false;
  for (int trial = 0; trial < 100; ++trial) {
    const SocialGraph g = RandomScoringGraph(rng, 6);
    for (const auto& r : ScoreFriends(g, NodeId(0), BinaryScheme(mask), {})) {
      EXPECT_EQ(r.total, r.mutual_friend_weight + r.mutual_community_weight);
      if (r.mutual_friend_weight == 0 && r.mutual_community_weight == 0) {
        EXPECT_EQ(r.total, 0u);
      }
    }
  }
}

TEST(MatcherPropertyTest, FriendOrderPermutationInvariance) {
  for (int trial = 0; trial < 200; ++trial) {
    std::mt19937 rng(1000 + trial);
    const SocialGraph ordered = RandomScoringGraph(rng, 7);
    // Same snapshot with only the base's friend list reordered.
    std::mt19937 shuffler(5000 + trial);
    UserProfile base = *ordered.Find(NodeId(0));
    std::shuffle(base.friends.begin(), base.friends.end(), shuffler);
    std::vector<UserProfile> profiles = ordered.profiles();
    for (auto& p : profiles) {
      if (p.id == base.id) p = base;
    }
    const SocialGraph shuffled = BuildSnapshot(std::move(profiles));
    for (const WeightScheme& s : {BinaryScheme(), HierarchyScheme()}) {
      auto a = ScoreFriends(ordered, NodeId(0), s, {});
      auto b = ScoreFriends(shuffled, NodeId(0), s, {});
      auto by_id = [](const SimilarityReport& x, const SimilarityReport& y) {
        return x.candidate < y.candidate;
      };
      std::sort(a.begin(), a.end(), by_id);
      std::sort(b.begin(), b.end(), by_id);
      EXPECT_EQ(a, b);
      EXPECT_EQ(RankCandidates(ordered, NodeId(0), s, {}),
                RankCandidates(shuffled, NodeId(0), s, {}));
    }
  }
}

TEST(MatcherPropertyTest, BinaryAndHierarchyIndicatorsAgree) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const SocialGraph g = RandomScoringGraph(rng, 5);
    const WeightScheme h = HierarchyScheme();
    for (Category c : kAllCategories) {
      const auto bin = BuildMatchingMatrix(g, NodeId(0), c, BinaryScheme());
      const auto hier = BuildMatchingMatrix(g, NodeId(0), c, h);
      for (std::size_t r = 0; r < bin.rows.size(); ++r) {
        for (const auto& [f, bit] : bin.rows[r].indicators) {
          const std::uint32_t contribution = hier.rows[r].indicator(f) * h.weight(f);
          EXPECT_EQ(bit == 0, contribution == 0);
        }
      }
    }
  }
}

TEST(MatcherPropertyTest, RowTotalsAndDecomposition) {
  std::mt19937 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const SocialGraph g = RandomScoringGraph(rng, 6);
    const WeightScheme s = trial % 2 ? BinaryScheme() : HierarchyScheme();
    for (Category c : kAllCategories) {
      for (const auto& row : BuildMatchingMatrix(g, NodeId(0), c, s).rows) {
        std::uint32_t sum = 0;
        for (const auto& [f, bit] : row.indicators) sum += bit * s.weight(f);
        EXPECT_EQ(row.weighted_total, sum);
      }
    }
    for (const auto& r : ScoreFriends(g, NodeId(0), s,
                                      {.mode = MutualMode::kWafScaled, .waf = 7})) {
      EXPECT_EQ(r.total, r.contact + r.personal + r.interest +
                             r.education_professional + r.mutual_friend_weight +
                             r.mutual_community_weight);
    }
  }
}

TEST(MatcherPropertyTest, WafScaledBound) {
  std::mt19937 rng(36);
  std::uniform_int_distribution<std::uint32_t> waf_dist(1, 50);
  std::uniform_int_distribution<std::size_t> friends_dist(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const SocialGraph g = RandomScoringGraph(rng, friends_dist(rng));
    if (g.Find(NodeId(0))->communities.empty()) continue;
    const MutualWeightConfig cfg{.mode = MutualMode::kWafScaled,
                                 .waf = waf_dist(rng)};
    for (const auto& f : g.OutNeighbors(NodeId(0))) {
      EXPECT_LE(MutualFriendWeight(g, NodeId(0), f, cfg), cfg.waf);
      EXPECT_LE(MutualCommunityWeight(g, NodeId(0), f, cfg), cfg.waf);
    }
  }
}

}  // namespace
}  // namespace pla
