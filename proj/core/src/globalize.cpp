#include "derivlab/globalize.hpp"

#include <atomic>
#include <sstream>

#include "check_engine.hpp"
#include "derivlab/parallel.hpp"

namespace derivlab {

namespace {

void require_full_carrier(const AdditiveMap& f, const char* who) {
    if (f.carrier() != Carrier::FullMatrixAlgebra) {
        throw Error(std::string(who) + " applies to the full matrix algebra");
    }
}

std::string cell_name(std::size_t i, std::size_t j) {
    std::ostringstream os;
    os << "e(" << i << "," << j << ")";
    return os.str();
}

} // namespace

GlobalizeOutcome globalize_direct(const AdditiveMap& f) {
    require_full_carrier(f, "globalize_direct");
    WitnessSystem sys;
    const std::vector<Matrix> basis = f.module_basis();
    const std::vector<Matrix> images = f.basis_images();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        sys.constraints.emplace_back(basis[j], images[j]);
    }
    const SolutionSpace sol = joint_solve(sys);
    if (!sol.particular) {
        return GlobalizeOutcome{std::nullopt,
                                GlobalizeFailure{"direct", "joint basis system unsolvable", std::nullopt}};
    }
    return GlobalizeOutcome{canonicalize(unvec(f.ring(), f.n(), *sol.particular)), std::nullopt};
}

GlobalizeOutcome globalize_stitch(const AdditiveMap& f, StitchState* trace) {
    require_full_carrier(f, "globalize_stitch");
    const Ring& ring = f.ring();
    const std::size_t n = f.n();

    auto image_of_unit = [&](std::size_t i, std::size_t j) { return f.apply(unit(ring, n, i, j)); };

    auto fail = [&](std::string stage, std::string detail,
                    std::optional<std::pair<std::size_t, std::size_t>> cell) {
        return GlobalizeOutcome{std::nullopt, GlobalizeFailure{std::move(stage), std::move(detail), cell}};
    };

    std::optional<Matrix> current;

    if (n == 1) {
        current = zeros(ring, 1, 1);
    } else {
        // base: pin e(0,1), and e(1,2) when it exists
        WitnessSystem base;
        base.constraints.emplace_back(unit(ring, n, 0, 1), image_of_unit(0, 1));
        if (n >= 3) base.constraints.emplace_back(unit(ring, n, 1, 2), image_of_unit(1, 2));
        const SolutionSpace sol = joint_solve(base);
        if (!sol.particular) {
            return fail("stitch:base", "no joint witness for the base superdiagonal pair", std::nullopt);
        }
        current = unvec(ring, n, *sol.particular);
    }

    if (trace) {
        trace->k = std::min<std::size_t>(n >= 3 ? 2 : n - 1, n - 1);
        trace->current = current;
        trace->pair_witnesses.clear();
    }

    // induction: pin e(kk-1, kk) (0-based) for kk = 3..n-1 in paper count
    for (std::size_t kk = 3; kk + 1 <= n; ++kk) {
        const std::size_t r0 = kk - 2, c0 = kk - 1; // previously pinned unit e(r0, c0)
        const std::size_t r1 = kk - 1, c1 = kk;     // unit being pinned
        WitnessSystem pair;
        pair.constraints.emplace_back(unit(ring, n, r0, c0), image_of_unit(r0, c0));
        pair.constraints.emplace_back(unit(ring, n, r1, c1), image_of_unit(r1, c1));
        const SolutionSpace sol = joint_solve(pair);
        std::ostringstream stage;
        stage << "stitch:k=" << kk;
        if (!sol.particular) {
            return fail(stage.str(), "no joint witness for the superdiagonal pair", std::make_pair(r1, c1));
        }
        const Matrix cw = unvec(ring, n, *sol.particular);

        // Entries of `current` in column kk-1 outside rows 1..kk-1
        // (0-based) do not touch any pinned identity; the pair witness
        // forces their values, so transfer them before patching.
        Matrix b = *current;
        b.set(0, r1, cw.at(0, r1));
        for (std::size_t r = kk; r < n; ++r) b.set(r, r1, cw.at(r, r1));

        // entrywise patch: keep rows/columns < kk, splice the trailing
        // block of the pair witness, gauge-align the new diagonal corner
        Matrix patched(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i < kk || j < kk) {
                    patched.set(i, j, b.at(i, j));
                } else {
                    patched.set(i, j, cw.at(i, j));
                }
            }
        }
        patched.set(kk, kk, cw.at(kk, kk) - cw.at(r1, r1) + b.at(r1, r1));
        current = patched;

        if (trace) {
            trace->k = kk;
            trace->current = current;
            trace->pair_witnesses.emplace(std::make_pair(r1, c1), cw);
        }

        for (std::size_t i = 0; i + 1 <= kk && i + 1 < n; ++i) {
            const Matrix u = unit(ring, n, i, i + 1);
            if (inner_apply(*current, u) != f.apply(u)) {
                return fail(stage.str(), "patched implementer violates a pinned superdiagonal unit",
                            std::make_pair(i, i + 1));
            }
        }
    }

    // closing pair: the superdiagonal sum together with the opposite
    // corner unit pins the one entry the induction leaves free
    if (n >= 2) {
        Matrix superdiag(ring, n, n);
        for (std::size_t t = 0; t + 1 < n; ++t) superdiag.set(t, t + 1, ring.one());
        WitnessSystem closing;
        closing.constraints.emplace_back(superdiag, f.apply(superdiag));
        closing.constraints.emplace_back(unit(ring, n, n - 1, 0), image_of_unit(n - 1, 0));
        const SolutionSpace sol = joint_solve(closing);
        if (sol.particular) {
            const Matrix u = unvec(ring, n, *sol.particular);
            current->set(0, n - 1, u.at(0, n - 1));
        }
        // unsolvable: leave the entry; the verification stage reports the
        // violated unit, which is the honest diagnosis
    }

    // full verification over every module basis element
    const std::vector<Matrix> basis = f.module_basis();
    const std::vector<Matrix> images = f.basis_images();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (inner_apply(*current, basis[j]) != images[j]) {
            const auto cells = detail::carrier_cells(f.carrier(), n);
            const std::size_t pos = j / f.ext_degree();
            const std::size_t cell = cells[pos][0];
            return fail("verify",
                        "stitched implementer disagrees with the map on " + cell_name(cell / n, cell % n),
                        std::make_pair(cell / n, cell % n));
        }
    }

    if (trace) trace->current = current;
    return GlobalizeOutcome{canonicalize(*current), std::nullopt};
}

ReconstructReport reconstruct_and_verify(const AdditiveMap& f, const PointSet& pts, unsigned workers) {
    require_full_carrier(f, "reconstruct_and_verify");
    ReconstructReport rep;

    const GlobalizeOutcome direct = globalize_direct(f);
    const GlobalizeOutcome stitch = globalize_stitch(f);
    if (!direct.ok() || !stitch.ok()) {
        rep.failure = direct.ok() ? stitch.failure : direct.failure;
        return rep;
    }
    rep.implementer = direct.implementer;
    rep.paths_agree = inner_equal(*direct.implementer, *stitch.implementer);
    if (!rep.paths_agree) {
        rep.consistency_fault = true;
        rep.failure = GlobalizeFailure{"verify", "globalization paths disagree beyond the center", std::nullopt};
        return rep;
    }

    const AdditiveMap g = map_from_inner(*rep.implementer);

    std::size_t total = 0;
    std::function<Matrix(std::size_t)> point_at;
    std::shared_ptr<std::vector<Matrix>> materialized;
    switch (pts.mode) {
        case PointSet::Mode::Exhaustive:
            total = detail::exhaustive_point_count(f.ring(), f.n(), f.carrier());
            point_at = [&f](std::size_t i) {
                return detail::exhaustive_point(f.ring(), f.n(), f.carrier(), i);
            };
            break;
        case PointSet::Mode::Sampled:
            materialized = std::make_shared<std::vector<Matrix>>(
                sampled_points(f.ring(), f.n(), f.carrier(), pts.count, pts.seed));
            total = materialized->size();
            point_at = [materialized](std::size_t i) { return (*materialized)[i]; };
            break;
        case PointSet::Mode::Explicit:
            total = pts.points.size();
            point_at = [&pts](std::size_t i) { return pts.points[i]; };
            break;
    }

    std::atomic<bool> mismatch{false};
    parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end && !mismatch.load(std::memory_order_relaxed); ++i) {
            const Matrix x = point_at(i);
            if (g.apply(x) != f.apply(x)) mismatch.store(true, std::memory_order_relaxed);
        }
    });
    rep.points_verified = total;
    if (mismatch.load()) {
        rep.failure = GlobalizeFailure{"verify", "reconstructed map disagrees with the input on a point",
                                       std::nullopt};
        return rep;
    }

    rep.derivation = is_derivation(f);
    if (!rep.derivation) {
        rep.failure = GlobalizeFailure{"verify", "map fails the Leibniz identity", std::nullopt};
        return rep;
    }

    rep.success = true;
    return rep;
}

} // namespace derivlab
