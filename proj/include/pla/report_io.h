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

#ifndef PLA_REPORT_IO_H_
#define PLA_REPORT_IO_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "pla/ids.h"
#include "pla/link_analysis.h"
#include "pla/matcher.h"

namespace pla {

// CSV: comma separated, header row always present, no quoting (ids and
// numbers only). JSON: one object per line, members named as the CSV
// header columns.
enum class OutputFormat { kCsv, kJson };

std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

// candidate,contact,personal,interest,education_professional,
// mutual_friends,mutual_communities,total
void WriteReports(std::ostream& out, std::span<const SimilarityReport> reports,
                  OutputFormat format);

// candidate,<field keys in column order>,total
void WriteMatrix(std::ostream& out, const MatchingMatrix& matrix,
                 OutputFormat format);

// One row for the ordered pair (u, v). Unreachable distances print as "inf";
// ratios print with six decimals.
void WriteFeatures(std::ostream& out, const ProfileId& u, const ProfileId& v,
                   const FeatureVector& features, OutputFormat format);

// Per-candidate components under both schemes, side by side. Both spans
// must list the same candidates in the same order.
void WriteChart(std::ostream& out, std::span<const SimilarityReport> binary,
                std::span<const SimilarityReport> hierarchy,
                OutputFormat format);

}  // namespace pla

#endif  // PLA_REPORT_IO_H_
