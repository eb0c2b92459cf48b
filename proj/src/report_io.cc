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

#include "pla/report_io.h"

#include <array>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "pla/errors.h"

namespace pla {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kReportColumns[] = {
    "contact",        "personal",           "interest",
    "education_professional", "mutual_friends", "mutual_communities",
    "total"};

std::array<std::uint32_t, 7> ReportValues(const SimilarityReport& r) {
  return {r.contact,
          r.personal,
          r.interest,
          r.education_professional,
          r.mutual_friend_weight,
          r.mutual_community_weight,
          r.total};
}

std::string FormatRatio(const Ratio& r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", r.value());
  return buf;
}

OrderedJson DistanceJson(const Distance& d) {
  if (d.is_finite()) return d.hops();
  return "inf";
}

}  // namespace

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

void WriteReports(std::ostream& out, std::span<const SimilarityReport> reports,
                  OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << "candidate";
    for (auto col : kReportColumns) out << ',' << col;
    out << '\n';
    for (const auto& r : reports) {
      out << r.candidate;
      for (auto v : ReportValues(r)) out << ',' << v;
      out << '\n';
    }
    return;
  }
  for (const auto& r : reports) {
    OrderedJson line;
    line["candidate"] = r.candidate.str();
    const auto values = ReportValues(r);
    for (std::size_t i = 0; i < values.size(); ++i) {
      line[std::string(kReportColumns[i])] = values[i];
    }
    out << line.dump() << '\n';
  }
}

void WriteMatrix(std::ostream& out, const MatchingMatrix& matrix,
                 OutputFormat format) {
  const auto fields = FieldsOf(matrix.category);
  if (format == OutputFormat::kCsv) {
    out << "candidate";
    for (FieldKey f : fields) out << ',' << FieldName(f);
    out << ",total\n";
    for (const auto& row : matrix.rows) {
      out << row.candidate;
      for (FieldKey f : fields) out << ',' << int{row.indicator(f)};
      out << ',' << row.weighted_total << '\n';
    }
    return;
  }
  for (const auto& row : matrix.rows) {
    OrderedJson line;
    line["candidate"] = row.candidate.str();
    for (FieldKey f : fields) {
      line[std::string(FieldName(f))] = int{row.indicator(f)};
    }
    line["total"] = row.weighted_total;
    out << line.dump() << '\n';
  }
}

void WriteFeatures(std::ostream& out, const ProfileId& u, const ProfileId& v,
                   const FeatureVector& fv, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    out << "u,v,in_u,in_v,out_u,out_v,mutual_friends,"
           "forward_deleted_distance,backward_distance,mutual_interests,"
           "interests_u,interests_v,ratio_u,ratio_v\n";
    out << u << ',' << v << ',' << fv.in_u << ',' << fv.in_v << ','
        << fv.out_u << ',' << fv.out_v << ',' << fv.mutual_friends << ','
        << fv.forward_deleted_distance.ToString() << ','
        << fv.backward_distance.ToString() << ',' << fv.interests.mutual
        << ',' << fv.interests.interests_u << ',' << fv.interests.interests_v
        << ',' << FormatRatio(fv.interests.ratio_u) << ','
        << FormatRatio(fv.interests.ratio_v) << '\n';
    return;
  }
  OrderedJson line;
  line["u"] = u.str();
  line["v"] = v.str();
  line["in_u"] = fv.in_u;
  line["in_v"] = fv.in_v;
  line["out_u"] = fv.out_u;
  line["out_v"] = fv.out_v;
  line["mutual_friends"] = fv.mutual_friends;
  line["forward_deleted_distance"] = DistanceJson(fv.forward_deleted_distance);
  line["backward_distance"] = DistanceJson(fv.backward_distance);
  line["mutual_interests"] = fv.interests.mutual;
  line["interests_u"] = fv.interests.interests_u;
  line["interests_v"] = fv.interests.interests_v;
  line["ratio_u"] = fv.interests.ratio_u.value();
  line["ratio_v"] = fv.interests.ratio_v.value();
  out << line.dump() << '\n';
}

void WriteChart(std::ostream& out, std::span<const SimilarityReport> binary,
                std::span<const SimilarityReport> hierarchy,
                OutputFormat format) {
  if (binary.size() != hierarchy.size()) {
    throw Error("chart series have different lengths");
  }
  if (format == OutputFormat::kCsv) {
    out << "candidate";
    for (std::string_view scheme : {"binary", "hierarchy"}) {
      for (auto col : kReportColumns) out << ',' << scheme << '_' << col;
    }
    out << '\n';
  }
  for (std::size_t i = 0; i < binary.size(); ++i) {
    if (binary[i].candidate != hierarchy[i].candidate) {
      throw Error("chart series list different candidates");
    }
    if (format == OutputFormat::kCsv) {
      out << binary[i].candidate;
      for (auto v : ReportValues(binary[i])) out << ',' << v;
      for (auto v : ReportValues(hierarchy[i])) out << ',' << v;
      out << '\n';
      continue;
    }
    OrderedJson line;
    line["candidate"] = binary[i].candidate.str();
    const auto b = ReportValues(binary[i]);
    const auto h = ReportValues(hierarchy[i]);
    for (std::size_t k = 0; k < b.size(); ++k) {
      line["binary_" + std::string(kReportColumns[k])] = b[k];
    }
    for (std::size_t k = 0; k < h.size(); ++k) {
      line["hierarchy_" + std::string(kReportColumns[k])] = h[k];
    }
    out << line.dump() << '\n';
  }
}

}  // namespace pla
