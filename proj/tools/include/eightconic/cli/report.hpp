#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eightconic/campaign.hpp"
#include "eightconic/catalog.hpp"
#include "eightconic/cli/config_io.hpp"

namespace eightconic::cli {

enum class Verdict { Ok, Skipped, Failed };

std::string_view to_string(Verdict v);

/// Worst of two verdicts (Failed > Skipped > Ok).
Verdict combine(Verdict a, Verdict b);

struct VerifyResult {
  Json report;
  Verdict verdict = Verdict::Ok;
};

/// Runs the eight-point pipeline and the requested checks on one config.
VerifyResult verify_config(const ParsedConfig& cfg);

struct CampaignSpec {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  GeneratorOptions options;
  std::vector<std::string> checks{"eight_point"};
  unsigned jobs = 1;
};

VerifyResult verify_campaign(const CampaignSpec& spec);

/// Six barycentric coefficients of the eight-point conic from its closed
/// form. Throws GeometryError (IsogonalUndefined) on a zero denominator.
Json conic_equation(const ParsedConfig& cfg);

struct CatalogRun {
  std::string table;
  Verdict verdict = Verdict::Ok;
};

/// Checks each entry on the reference quadrilateral plus `trials` seeded
/// random quadrilaterals.
CatalogRun run_catalog(const std::vector<CatalogEntry>& entries, std::size_t trials,
                       std::uint64_t seed, unsigned jobs);

}  // namespace eightconic::cli
