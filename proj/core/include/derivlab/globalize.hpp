#pragma once

#include <map>
#include <optional>
#include <string>

#include "derivlab/localcheck.hpp"

namespace derivlab {

struct GlobalizeFailure {
    /// "direct", "stitch:base", "stitch:k=<k>" (1-based superdiagonal
    /// index) or "verify".
    std::string stage;
    std::string detail;
    /// Violated basis cell (0-based) when the failure names one.
    std::optional<std::pair<std::size_t, std::size_t>> unit;
};

struct GlobalizeOutcome {
    std::optional<Matrix> implementer; // canonical gauge, zero (0,0) entry
    std::optional<GlobalizeFailure> failure;

    bool ok() const { return implementer.has_value(); }
};

/// One joint solve over every module basis constraint {(b, f(b))}.
/// Unsolvable certifies that f is not a local inner derivation.
GlobalizeOutcome globalize_direct(const AdditiveMap& f);

/// Trace of the superdiagonal induction.
struct StitchState {
    std::size_t k = 0;                                        // pinned superdiagonal units
    std::optional<Matrix> current;                            // implementer so far
    std::map<std::pair<std::size_t, std::size_t>, Matrix> pair_witnesses;
};

/// The stitching construction: pin the superdiagonal units one by one via
/// pair witnesses, patch the implementer entrywise, close with the
/// (superdiagonal sum, corner unit) pair, then verify every basis
/// element. Every step that is not forced re-checks its invariant and
/// fails honestly.
GlobalizeOutcome globalize_stitch(const AdditiveMap& f, StitchState* trace = nullptr);

struct ReconstructReport {
    bool success = false;
    std::optional<Matrix> implementer;
    bool paths_agree = false;
    bool derivation = false;
    std::size_t points_verified = 0;
    std::optional<GlobalizeFailure> failure;
    /// Set when the two globalization paths disagree up to center; must
    /// never happen on accepted maps.
    bool consistency_fault = false;
};

/// Runs both globalization paths, cross-checks them up to center, then
/// verifies map_from_inner(result) against f on every point of pts and
/// checks the Leibniz identity.
ReconstructReport reconstruct_and_verify(const AdditiveMap& f, const PointSet& pts,
                                         unsigned workers = 0);

} // namespace derivlab
