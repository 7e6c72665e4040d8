#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derivlab/globalize.hpp"
#include "derivlab/jordan.hpp"
#include "derivlab/scan.hpp"

namespace derivlab {

AdditiveMap random_inner_map(const Ring& ring, std::size_t n, Carrier carrier, Rng& rng);
AdditiveMap random_patched_map(const Ring& ring, std::size_t n, Carrier carrier, Rng& rng);

struct GeneratorSpec {
    enum class Kind { InnerRandom, BasisPatchedRandom, ExplicitFiles };

    Kind kind = Kind::InnerRandom;
    std::size_t count = 0;
    std::vector<std::string> paths;
};

struct CampaignConfig {
    RingSpec ring;
    std::size_t n = 2;
    Carrier algebra = Carrier::FullMatrixAlgebra;
    bool exhaustive = false;   // per-map point mode
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::vector<GeneratorSpec> generators;
    std::string output; // report path, empty = stdout only
    unsigned workers = 0;
};

CampaignConfig campaign_config_from_json(const std::string& text);

struct MapRecord {
    std::size_t index = 0;
    std::string generator;
    Verdict verdict;
    std::optional<ReconstructReport> reconstruct;        // full algebra
    std::optional<JordanGlobalizeOutcome> jordan_result; // Jordan carrier
    double timing_ms = 0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<MapRecord> records;
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::size_t globalize_success = 0;
    JordanVariant variant = JordanVariant::Half;
};

/// Generates maps per the generator list, runs check + globalize on each,
/// and aggregates. Deterministic under a fixed seed up to timing fields.
CampaignReport run_campaign(const CampaignConfig& config);

std::string to_json(const CampaignReport& report);

} // namespace derivlab
