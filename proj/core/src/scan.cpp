#include "derivlab/scan.hpp"

#include <chrono>
#include <set>

#include "check_engine.hpp"
#include "derivlab/globalize.hpp"
#include "derivlab/parallel.hpp"
#include "json_io.hpp"

namespace derivlab {

namespace {

// Maps are enumerated through their action matrices: mixed-radix digits
// over the base ring, row-major, least-significant entry first.
std::size_t scan_space_size(const Ring& base, std::size_t module_dim) {
    const Int card = base.cardinality();
    Int total = 1;
    for (std::size_t i = 0; i < module_dim * module_dim; ++i) {
        total *= card;
        if (total > Int(kScanMapBudget)) {
            throw BudgetError("map-space scan exceeds the 2^20 budget; use sampled campaigns");
        }
    }
    return total.convert_to<std::size_t>();
}

Matrix action_from_index(const Ring& base, std::size_t module_dim, std::uint64_t index) {
    const std::uint64_t card = base.cardinality().convert_to<std::uint64_t>();
    Matrix action(base, module_dim, module_dim);
    std::uint64_t rest = index;
    for (std::size_t cell = 0; cell < module_dim * module_dim; ++cell) {
        action.set(cell / module_dim, cell % module_dim, base.element_at(Int(rest % card)));
        rest /= card;
    }
    return action;
}

std::uint64_t index_from_action(const Matrix& action) {
    const std::uint64_t card = action.ring().cardinality().convert_to<std::uint64_t>();
    const std::size_t dim = action.rows();
    std::uint64_t index = 0;
    for (std::size_t cell = dim * dim; cell-- > 0;) {
        Int digit = 0;
        const Scalar& s = action.at(cell / dim, cell % dim);
        if (action.ring().kind() == RingKind::ExtensionField) {
            const auto& c = s.coeffs();
            for (std::size_t t = c.size(); t-- > 0;) digit = digit * action.ring().spec().p + c[t];
        } else {
            digit = s.as_int();
        }
        index = index * card + digit.convert_to<std::uint64_t>();
    }
    return index;
}

// Enumerates the implemented maps (inner / skew-implemented) as action
// indices.
std::set<std::uint64_t> implemented_indices(const Ring& ring, std::size_t n, Carrier carrier) {
    const std::size_t impl_dim =
        carrier == Carrier::FullMatrixAlgebra ? n * n : n * (n - 1) / 2;
    const Int card = ring.cardinality();
    Int total = 1;
    for (std::size_t i = 0; i < impl_dim; ++i) {
        total *= card;
        if (total > Int(kScanMapBudget)) {
            throw BudgetError("implementer enumeration exceeds the scan budget");
        }
    }
    const std::uint64_t count = total.convert_to<std::uint64_t>();
    const std::uint64_t c64 = card.convert_to<std::uint64_t>();

    std::set<std::uint64_t> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Matrix a(ring, n, n);
        std::uint64_t rest = idx;
        if (carrier == Carrier::FullMatrixAlgebra) {
            for (std::size_t cell = 0; cell < n * n; ++cell) {
                a.set(cell / n, cell % n, ring.element_at(Int(rest % c64)));
                rest /= c64;
            }
            out.insert(index_from_action(map_from_inner(a).action()));
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    const Scalar s = ring.element_at(Int(rest % c64));
                    rest /= c64;
                    a.set(i, j, s);
                    a.set(j, i, -s);
                }
            }
            out.insert(index_from_action(jordan_map_from_skew(a).action()));
        }
    }
    return out;
}

} // namespace

ScanReport run_scan(const ScanConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const Ring ring(config.ring);
    if (!ring.is_finite()) {
        throw InfiniteRingError("map-space scan requires a finite ring");
    }
    const std::size_t n = config.n;
    if (n == 0) throw ShapeError("scan dimension must be positive");
    const Ring base = AdditiveMap::base_ring_of(ring);
    const unsigned k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t module_dim = carrier_dim(config.algebra, n) * k;
    const std::size_t total = scan_space_size(base, module_dim);

    // the per-map exhaustive point check must fit the budget as well
    detail::exhaustive_point_count(ring, n, config.algebra);

    ScanReport rep;
    rep.ring = ring.spec();
    rep.n = n;
    rep.algebra = config.algebra;
    rep.maps_total = total;
    rep.variant = jordan_variant(ring);

    enum : std::uint8_t { kAccepted = 1, kDerivation = 2, kReconstruct = 4 };
    std::vector<std::uint8_t> flags(total, 0);

    parallel_chunks(total, effective_workers(config.workers), [&](std::size_t begin, std::size_t end) {
        const PointSet pts = PointSet::exhaustive();
        for (std::size_t idx = begin; idx < end; ++idx) {
            const AdditiveMap f(ring, n, config.algebra,
                                action_from_index(base, module_dim, idx));
            Verdict v = config.algebra == Carrier::FullMatrixAlgebra
                            ? check_local_inner(f, pts, 1)
                            : check_local_inner_jordan(f, pts, 1);
            std::uint8_t fl = 0;
            if (v.accepted()) {
                fl |= kAccepted;
                if (config.algebra == Carrier::FullMatrixAlgebra) {
                    if (is_derivation(f)) fl |= kDerivation;
                    const GlobalizeOutcome g = globalize_direct(f);
                    if (g.ok() && map_from_inner(*g.implementer) == f) fl |= kReconstruct;
                } else {
                    if (jordan_is_derivation(f)) fl |= kDerivation;
                    const JordanGlobalizeOutcome g = globalize_jordan(f);
                    if (g.ok() && jordan_map_from_skew(g.implementer->matrix()) == f) {
                        fl |= kReconstruct;
                    }
                }
            } else {
                // classification only; the Leibniz flag is still recorded
                const bool deriv = config.algebra == Carrier::FullMatrixAlgebra
                                       ? is_derivation(f)
                                       : jordan_is_derivation(f);
                if (deriv) fl |= kDerivation;
            }
            flags[idx] = fl;
        }
    });

    bool all_deriv = true, all_reconstruct = true;
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (flags[idx] & kDerivation) ++rep.derivation_count;
        if (flags[idx] & kAccepted) {
            ++rep.local_inner_count;
            rep.accepted_indices.push_back(idx);
            if (!(flags[idx] & kDerivation)) all_deriv = false;
            if (!(flags[idx] & kReconstruct)) all_reconstruct = false;
        }
    }
    rep.accepted_all_derivations = all_deriv;
    rep.accepted_all_reconstruct = all_reconstruct;

    const std::set<std::uint64_t> implemented = implemented_indices(ring, n, config.algebra);
    rep.implemented_count = implemented.size();
    rep.sets_equal = implemented.size() == rep.accepted_indices.size() &&
                     std::equal(implemented.begin(), implemented.end(), rep.accepted_indices.begin());

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string to_json(const ScanReport& rep) {
    detail::Json j;
    j["ring"] = detail::ring_spec_json(rep.ring);
    j["n"] = rep.n;
    j["algebra"] = detail::carrier_name(rep.algebra);
    j["maps_total"] = rep.maps_total;
    j["local_inner_count"] = rep.local_inner_count;
    j["implemented_count"] = rep.implemented_count;
    j["derivation_count"] = rep.derivation_count;
    j["sets_equal"] = rep.sets_equal;
    j["accepted_all_derivations"] = rep.accepted_all_derivations;
    j["accepted_all_reconstruct"] = rep.accepted_all_reconstruct;
    j["accepted_indices"] = rep.accepted_indices;
    j["jordan_product_variant"] = rep.variant == JordanVariant::Half ? "half" : "doubled";
    j["tool_version"] = DERIVLAB_VERSION;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j.dump(2);
}

} // namespace derivlab
