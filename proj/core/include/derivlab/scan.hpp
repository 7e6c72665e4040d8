#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "derivlab/jordan.hpp"
#include "derivlab/localcheck.hpp"

namespace derivlab {

/// Full map-space scans are rejected beyond this many maps.
inline constexpr std::size_t kScanMapBudget = std::size_t(1) << 20;

struct ScanConfig {
    RingSpec ring;
    std::size_t n = 2;
    Carrier algebra = Carrier::FullMatrixAlgebra;
    unsigned workers = 0;
};

struct ScanReport {
    RingSpec ring;
    std::size_t n = 0;
    Carrier algebra = Carrier::FullMatrixAlgebra;
    std::size_t maps_total = 0;
    std::size_t local_inner_count = 0;
    /// Inner maps on the full algebra, skew-implemented maps on the
    /// Jordan carrier.
    std::size_t implemented_count = 0;
    std::size_t derivation_count = 0;
    /// {local inner} = {inner} resp. {skew-implemented}, as map sets.
    bool sets_equal = false;
    /// Every accepted map passes the (Jordan) Leibniz test.
    bool accepted_all_derivations = false;
    /// On the full algebra: every accepted map equals
    /// map_from_inner(globalize_direct(map)).
    bool accepted_all_reconstruct = false;
    std::vector<std::uint64_t> accepted_indices; // canonical enumeration order
    JordanVariant variant = JordanVariant::Half; // flagged for doubled-product rings
    double elapsed_seconds = 0;
};

/// Enumerates every prime-ring-linear self-map of the algebra, classifies
/// each one, and checks the classification set equalities. Throws
/// BudgetError / InfiniteRingError when the space cannot be enumerated.
ScanReport run_scan(const ScanConfig& config);

std::string to_json(const ScanReport& report);

} // namespace derivlab
