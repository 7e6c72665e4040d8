#pragma once

// Internal sweep engine shared by the full-algebra checker, the Jordan
// checker and the exhaustive scans. Not installed.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "derivlab/localcheck.hpp"

namespace derivlab::detail {

using SolveFn = std::function<std::optional<Matrix>(const Matrix& x, const Matrix& y)>;

/// Does this witness implement f on the whole carrier? (Action equality;
/// by linearity it then witnesses every point at once.)
using GlobalWitnessFn = std::function<bool(const Matrix&)>;

/// Column-by-column action comparison with early exit; works for both
/// carriers since both actions are commutator actions.
bool witness_action_equals(const Matrix& w, const AdditiveMap& f);

/// One shot at a carrier-wide witness (the joint basis system). Invoked
/// lazily on large point sets once pointwise witnesses stop gluing.
using GlobalSolveFn = std::function<std::optional<Matrix>()>;

struct SweepResult {
    std::optional<std::size_t> first_fail;
    std::size_t solves = 0;
    std::size_t reuses = 0;
};

/// Walks all points, reusing previously found witnesses before falling
/// back to the exact solver; records the minimal failing index. A witness
/// whose action equals f's certifies every remaining point by linearity.
SweepResult sweep_points(const AdditiveMap& f, std::size_t count,
                         const std::function<Matrix(std::size_t)>& point_at,
                         const SolveFn& solve, const GlobalWitnessFn& is_global,
                         const GlobalSolveFn& global_solve, unsigned workers);

/// Machine-word variant of the exhaustive sweep for GF(p) / Z/m with
/// modulus <= 2^16. Mathematically identical to sweep_points over the
/// canonical enumeration; only the arithmetic representation changes.
SweepResult sweep_exhaustive_fast(const AdditiveMap& f, std::size_t total,
                                  const SolveFn& solve, const GlobalWitnessFn& is_global,
                                  const GlobalSolveFn& global_solve, unsigned workers);

bool fast_sweep_applicable(const AdditiveMap& f);

/// Full checker pipeline: point-source dispatch, sweep, verdict assembly
/// and the reject re-verification. The carrier guard stays with the
/// public entry points.
Verdict run_verdict(const AdditiveMap& f, const PointSet& pts, const SolveFn& solve,
                    const GlobalWitnessFn& is_global, const GlobalSolveFn& global_solve,
                    unsigned workers);

/// Carrier cell layout: coordinate index -> matrix cells. The Jordan
/// coordinate for i < j covers the two mirrored cells.
std::vector<std::vector<std::size_t>> carrier_cells(Carrier carrier, std::size_t n);

/// Point count of the full finite carrier; throws InfiniteRingError /
/// BudgetError past kExhaustivePointBudget.
std::size_t exhaustive_point_count(const Ring& ring, std::size_t n, Carrier carrier);

/// Point of the canonical exhaustive enumeration (mixed-radix over the
/// carrier coordinates, least-significant coordinate first).
Matrix exhaustive_point(const Ring& ring, std::size_t n, Carrier carrier, std::size_t index);

} // namespace derivlab::detail
