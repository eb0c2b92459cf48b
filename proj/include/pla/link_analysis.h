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

#ifndef PLA_LINK_ANALYSIS_H_
#define PLA_LINK_ANALYSIS_H_

#include <cstdint>
#include <span>
#include <string>

#include "pla/ids.h"
#include "pla/social_graph.h"

namespace pla {

// Shortest directed path length in edges, or unreachable.
class Distance {
 public:
  static Distance Finite(std::uint32_t hops) { return Distance(hops); }
  static Distance Unreachable() { return Distance(); }

  bool is_finite() const { return hops_ != kInfinite; }
  // Only meaningful when is_finite().
  std::uint32_t hops() const { return hops_; }

  // Decimal hop count, or "inf".
  std::string ToString() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  static constexpr std::uint32_t kInfinite = UINT32_MAX;
  Distance() : hops_(kInfinite) {}
  explicit Distance(std::uint32_t hops) : hops_(hops) {}

  std::uint32_t hops_;
};

// Non-negative fraction; a zero denominator reads as 0.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;

  double value() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) /
                                  static_cast<double>(denominator);
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct Degrees {
  std::size_t in = 0;
  std::size_t out = 0;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

Degrees DegreesOf(const SocialGraph& g, const ProfileId& u);

// Shortest u -> v path once the single edge (u, v) is removed. Every other
// edge, including (v, u), stays. Throws InvalidPair when u == v.
Distance ForwardDeletedDistance(const SocialGraph& g, const ProfileId& u,
                                const ProfileId& v);

// Shortest v -> u path in the unmodified graph. Throws InvalidPair.
Distance BackwardDistance(const SocialGraph& g, const ProfileId& u,
                          const ProfileId& v);

// Where a profile's interest items come from.
enum class InterestSource {
  kCommunities,
  // Community ids plus "<field>:<value>" for the interest-category fields.
  kCommunitiesAndInterestFields,
};

struct InterestFeatures {
  std::size_t mutual = 0;
  std::size_t interests_u = 0;
  std::size_t interests_v = 0;
  Ratio ratio_u;  // mutual / interests_u
  Ratio ratio_v;  // mutual / interests_v
  friend bool operator==(const InterestFeatures&,
                         const InterestFeatures&) = default;
};

InterestFeatures ComputeInterestFeatures(
    const SocialGraph& g, const ProfileId& u, const ProfileId& v,
    InterestSource source = InterestSource::kCommunities);

struct PathMetrics {
  std::size_t path_length = 0;  // edges
  std::size_t hop_count = 0;    // intermediate users
  friend bool operator==(const PathMetrics&, const PathMetrics&) = default;
};

// Throws InvalidPath if consecutive nodes are not joined by an edge, or
// Error for an empty path.
PathMetrics ComputePathMetrics(const SocialGraph& g,
                               std::span<const ProfileId> path);

struct FeatureVector {
  std::size_t in_u = 0;
  std::size_t in_v = 0;
  std::size_t out_u = 0;
  std::size_t out_v = 0;
  std::size_t mutual_friends = 0;
  Distance forward_deleted_distance = Distance::Unreachable();
  Distance backward_distance = Distance::Unreachable();
  InterestFeatures interests;
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

FeatureVector ComputeFeatureVector(
    const SocialGraph& g, const ProfileId& u, const ProfileId& v,
    InterestSource source = InterestSource::kCommunities);

// Sum over items shared by a and b of 1 / ln(frequency). Items are the ones
// from ProfileItems; frequency counts ingested profiles holding the item.
// Throws InvalidPair when a == b.
double UniquenessSimilarity(const SocialGraph& g, const ProfileId& a,
                            const ProfileId& b);

}  // namespace pla

#endif  // PLA_LINK_ANALYSIS_H_
