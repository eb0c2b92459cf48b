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

#include "pla/cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pla/errors.h"
#include "pla/ingest.h"
#include "pla/link_analysis.h"
#include "pla/matcher.h"
#include "pla/report_io.h"
#include "pla/social_graph.h"
#include "pla/weights.h"

namespace pla {
namespace {

struct RunConfig {
  std::string snapshot_path;
  std::string base;
  std::string scheme = "binary";
  std::string weights_override;
  std::string mutual_mode = "raw";
  std::uint32_t waf = 10;
  std::string output_format = "csv";
  std::string output_path;

  // Subcommand specific.
  std::string candidate;
  std::string category;
  std::string u;
  std::string v;
  std::string interest_source = "communities";
  std::string aliases_path;
  std::vector<std::string> dump_paths;
};

void AddSnapshotOption(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--snapshot", cfg.snapshot_path, "Normalized snapshot file")
      ->envname("PLA_SNAPSHOT")
      ->required();
}

void AddOutputOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.output_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", cfg.output_path, "Output file (default stdout)");
}

void AddMutualOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--mutual", cfg.mutual_mode, "Mutual weight mode")
      ->check(CLI::IsMember({"raw", "waf"}));
  cmd->add_option("--waf", cfg.waf, "Weight adjustment factor (waf mode)")
      ->check(CLI::Range(1u, UINT32_MAX));
}

void AddSchemeOptions(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--scheme", cfg.scheme, "Weight scheme")
      ->check(CLI::IsMember({"binary", "hierarchy"}));
  cmd->add_option("--weights", cfg.weights_override,
                  "field_key=integer overrides applied to the scheme");
}

WeightScheme MakeScheme(const RunConfig& cfg) {
  WeightScheme scheme =
      cfg.scheme == "hierarchy" ? HierarchyScheme() : BinaryScheme();
  if (!cfg.weights_override.empty()) {
    scheme = scheme.WithOverrides(LoadWeightOverrides(cfg.weights_override));
  }
  return scheme;
}

MutualWeightConfig MakeMutual(const RunConfig& cfg) {
  return {.mode = cfg.mutual_mode == "waf" ? MutualMode::kWafScaled
                                           : MutualMode::kRawCount,
          .waf = cfg.waf};
}

OutputFormat MakeFormat(const RunConfig& cfg) {
  return *ParseOutputFormat(cfg.output_format);
}

ProfileId RequireId(const std::string& text, std::string_view flag) {
  const auto id = ProfileId::Parse(text);
  if (!id) {
    throw InvalidConfig(std::string(flag) + " is not a profile id: \"" + text +
                        "\"");
  }
  return *id;
}

// Writes the rendered artifact to --output or stdout.
void Emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << text;
    out.flush();
    if (!out) throw Error("failed writing output");
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write output: " + cfg.output_path);
  file << text;
  file.flush();
  if (!file) throw Error("failed writing output: " + cfg.output_path);
}

int CmdIngest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  AliasTable aliases;
  if (!cfg.aliases_path.empty()) aliases = AliasTable::Load(cfg.aliases_path);

  std::vector<UserProfile> records;
  bool failed = false;
  for (const auto& path : cfg.dump_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << "pla: cannot read dump: " << path << '\n';
      failed = true;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      records.push_back(Canonicalize(ExtractTokens(buf.str()), aliases));
    } catch (const Error& e) {
      err << "pla: " << path << ": " << e.what() << '\n';
      failed = true;
    }
  }
  if (failed) return 1;

  const SocialGraph g = SocialGraph::Build(std::move(records));
  WriteSnapshot(g, std::filesystem::path(cfg.snapshot_path));

  std::set<std::string> communities;
  for (const auto& p : g.profiles()) {
    for (const auto& c : p.communities) communities.insert(c.str());
  }
  out << "profiles=" << g.size() << " edges=" << g.edge_count()
      << " communities=" << communities.size() << '\n';
  return 0;
}

int CmdScore(const RunConfig& cfg, bool ranked, std::ostream& out) {
  const SocialGraph g = ReadSnapshot(cfg.snapshot_path);
  const ProfileId base = RequireId(cfg.base, "--base");
  const WeightScheme scheme = MakeScheme(cfg);
  const MutualWeightConfig mutual = MakeMutual(cfg);

  std::vector<SimilarityReport> reports;
  if (ranked) {
    reports = RankCandidates(g, base, scheme, mutual);
  } else if (!cfg.candidate.empty()) {
    if (!g.Contains(base)) throw UnknownProfile(base.str());
    reports.push_back(TotalSimilarity(
        g, base, RequireId(cfg.candidate, "--candidate"), scheme, mutual));
  } else {
    reports = ScoreFriends(g, base, scheme, mutual);
  }
  std::ostringstream text;
  WriteReports(text, reports, MakeFormat(cfg));
  Emit(cfg, text.str(), out);
  return 0;
}

int CmdMatrix(const RunConfig& cfg, std::ostream& out) {
  const auto category = ParseCategoryName(cfg.category);
  if (!category) throw InvalidConfig("unknown category: " + cfg.category);
  const SocialGraph g = ReadSnapshot(cfg.snapshot_path);
  const MatchingMatrix m = BuildMatchingMatrix(
      g, RequireId(cfg.base, "--base"), *category, MakeScheme(cfg));
  std::ostringstream text;
  WriteMatrix(text, m, MakeFormat(cfg));
  Emit(cfg, text.str(), out);
  return 0;
}

int CmdFeatures(const RunConfig& cfg, std::ostream& out) {
  const SocialGraph g = ReadSnapshot(cfg.snapshot_path);
  const ProfileId u = RequireId(cfg.u, "--u");
  const ProfileId v = RequireId(cfg.v, "--v");
  const InterestSource source = cfg.interest_source == "all"
                                    ? InterestSource::kCommunitiesAndInterestFields
                                    : InterestSource::kCommunities;
  const FeatureVector fv = ComputeFeatureVector(g, u, v, source);
  std::ostringstream text;
  WriteFeatures(text, u, v, fv, MakeFormat(cfg));
  Emit(cfg, text.str(), out);
  return 0;
}

int CmdChart(const RunConfig& cfg, std::ostream& out) {
  const SocialGraph g = ReadSnapshot(cfg.snapshot_path);
  if (g.empty()) throw Error("snapshot has no profiles");
  const ProfileId base = RequireId(cfg.base, "--base");
  const MutualWeightConfig mutual = MakeMutual(cfg);
  const auto binary = ScoreFriends(g, base, BinaryScheme(), mutual);
  const auto hierarchy = ScoreFriends(g, base, HierarchyScheme(), mutual);
  std::ostringstream text;
  WriteChart(text, binary, hierarchy, MakeFormat(cfg));
  Emit(cfg, text.str(), out);
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Profile closeness and link analysis over social graph snapshots",
               "pla"};
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Parse dump files into a snapshot");
  ingest->add_option("--snapshot", cfg.snapshot_path, "Snapshot file to write")
      ->envname("PLA_SNAPSHOT")
      ->required();
  ingest->add_option("--aliases", cfg.aliases_path,
                     "Alias table: field TAB variant TAB canonical");
  ingest->add_option("dumps", cfg.dump_paths, "Extractor dump files");

  auto* score = app.add_subcommand("score", "Similarity reports in friend-list order");
  auto* rank = app.add_subcommand("rank", "Similarity reports ranked by total");
  auto* matrix = app.add_subcommand("matrix", "One category matching matrix");
  auto* chart = app.add_subcommand("chart", "Binary and hierarchy series for plotting");
  auto* features = app.add_subcommand("features", "Link features of an ordered pair");

  for (CLI::App* cmd : {score, rank, matrix, chart, features}) {
    AddSnapshotOption(cmd, cfg);
    AddOutputOptions(cmd, cfg);
  }
  for (CLI::App* cmd : {score, rank, matrix, chart}) {
    cmd->add_option("--base", cfg.base, "Base profile id")->required();
  }
  for (CLI::App* cmd : {score, rank, chart}) AddMutualOptions(cmd, cfg);
  for (CLI::App* cmd : {score, rank, matrix}) AddSchemeOptions(cmd, cfg);
  score->add_option("--candidate", cfg.candidate, "Score a single candidate");
  matrix->add_option("--category", cfg.category,
                     "contact|personal|interest|education_professional")
      ->required();
  features->add_option("--u", cfg.u, "Source profile id")->required();
  features->add_option("--v", cfg.v, "Target profile id")->required();
  features->add_option("--interest-source", cfg.interest_source,
                       "communities|all")
      ->check(CLI::IsMember({"communities", "all"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (ingest->parsed()) return CmdIngest(cfg, out, err);
    if (score->parsed()) return CmdScore(cfg, /*ranked=*/false, out);
    if (rank->parsed()) return CmdScore(cfg, /*ranked=*/true, out);
    if (matrix->parsed()) return CmdMatrix(cfg, out);
    if (features->parsed()) return CmdFeatures(cfg, out);
    if (chart->parsed()) return CmdChart(cfg, out);
  } catch (const Error& e) {
    err << "pla: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace pla
