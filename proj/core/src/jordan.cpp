#include "derivlab/jordan.hpp"

#include "check_engine.hpp"

namespace derivlab {

JordanVariant jordan_variant(const Ring& ring) {
    return ring.two_invertible() ? JordanVariant::Half : JordanVariant::Doubled;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
    if (!is_symmetric(m_)) throw ShapeError("matrix is not symmetric");
}

namespace {

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix half_scale(const Matrix& m) {
    const auto two_inv = m.ring().inv(m.ring().from_int(2));
    if (!two_inv) throw Error("2 is not invertible in this ring; use the doubled product");
    return mat_scale(*two_inv, m);
}

Matrix jp(const Matrix& a, const Matrix& b, JordanVariant variant) {
    const Matrix d = anticommutator(a, b);
    return variant == JordanVariant::Half ? half_scale(d) : d;
}

} // namespace

SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(half_scale(anticommutator(a.matrix(), b.matrix())));
}

SymMatrix jordan_product_doubled(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(anticommutator(a.matrix(), b.matrix()));
}

SymMatrix jordan_product_auto(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(jp(a.matrix(), b.matrix(), jordan_variant(a.ring())));
}

SymMatrix inner_jordan_apply(const JordanDerivationPairs& p, const SymMatrix& x) {
    if (p.pairs.empty()) throw Error("empty generator list");
    const Ring& ring = x.ring();
    const JordanVariant variant = jordan_variant(ring);
    Matrix acc = zeros(ring, x.n(), x.n());
    for (const auto& [a, b] : p.pairs) {
        const Matrix bx = jp(b.matrix(), x.matrix(), variant);
        const Matrix ax = jp(a.matrix(), x.matrix(), variant);
        acc = acc + jp(a.matrix(), bx, variant) - jp(b.matrix(), ax, variant);
    }
    return SymMatrix(std::move(acc));
}

SkewImplementer::SkewImplementer(Matrix c) : c_(std::move(c)) {
    if (!is_skew(c_)) throw ShapeError("matrix is not skew-symmetric with zero diagonal");
}

SkewImplementer pairs_to_skew(const JordanDerivationPairs& p) {
    if (p.pairs.empty()) throw Error("empty generator list");
    const Ring& ring = p.pairs.front().first.ring();
    const std::size_t n = p.pairs.front().first.n();
    Matrix acc = zeros(ring, n, n);
    for (const auto& [a, b] : p.pairs) acc = acc + commutator(a.matrix(), b.matrix());
    if (jordan_variant(ring) == JordanVariant::Half) {
        const auto four_inv = ring.inv(ring.from_int(4));
        acc = mat_scale(*four_inv, acc);
    }
    return SkewImplementer(std::move(acc));
}

JordanDerivationPairs skew_to_pairs(const SkewImplementer& c) {
    const Ring& ring = c.matrix().ring();
    const std::size_t n = c.matrix().rows();
    const bool half = jordan_variant(ring) == JordanVariant::Half;
    JordanDerivationPairs out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Scalar& cij = c.matrix().at(i, j);
            if (cij.is_zero()) continue;
            // c_ij (e_ij - e_ji) = c_ij [e_ii, ebar_ij]; the half variant
            // rescales by 4 to cancel the 1/4 in pairs_to_skew
            Scalar coef = half ? ring.from_int(4) * cij : cij;
            out.pairs.emplace_back(SymMatrix(mat_scale(coef, unit(ring, n, i, i))),
                                   SymMatrix(unit(ring, n, i, j) + unit(ring, n, j, i)));
        }
    }
    if (out.pairs.empty()) {
        const Matrix z = zeros(ring, n, n);
        out.pairs.emplace_back(SymMatrix(z), SymMatrix(z));
    }
    return out;
}

AdditiveMap jordan_map_from_skew(const Matrix& c) {
    if (!is_skew(c)) throw ShapeError("implementer is not skew-symmetric");
    const Ring& ring = c.ring();
    const std::size_t n = c.rows();
    const Ring base = AdditiveMap::base_ring_of(ring);
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(Carrier::JordanSymmetric, n) * k;
    AdditiveMap probe(ring, n, Carrier::JordanSymmetric, identity(base, d));
    std::vector<Matrix> images;
    images.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        images.push_back(inner_apply(c, probe.module_basis_element(j)));
    }
    return map_from_basis_images(ring, n, Carrier::JordanSymmetric, images);
}

AdditiveMap jordan_map_from_pairs(const JordanDerivationPairs& p) {
    return jordan_map_from_skew(pairs_to_skew(p).matrix());
}

AdditiveMap gen_jordan_basis_patched(const Ring& ring, std::size_t n,
                                     const std::vector<Matrix>& skew_implementers) {
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(Carrier::JordanSymmetric, n) * k;
    if (skew_implementers.size() != d) {
        throw ShapeError("expected one skew implementer per module basis element");
    }
    const Ring base = AdditiveMap::base_ring_of(ring);
    AdditiveMap probe(ring, n, Carrier::JordanSymmetric, identity(base, d));
    std::vector<Matrix> images;
    images.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (!is_skew(skew_implementers[j])) throw ShapeError("implementer is not skew-symmetric");
        images.push_back(inner_apply(skew_implementers[j], probe.module_basis_element(j)));
    }
    return map_from_basis_images(ring, n, Carrier::JordanSymmetric, images);
}

namespace {

// Linear system for skew c with cx - xc = y: unknowns are the strict
// upper entries of c, equations the n^2 cells.
struct SkewSystem {
    Matrix op;
    std::vector<std::pair<std::size_t, std::size_t>> unknown_cells;
};

SkewSystem skew_commutation_operator(const Matrix& x) {
    const Ring& ring = x.ring();
    const std::size_t n = x.rows();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
    }
    Matrix op(ring, n * n, unknowns.size() == 0 ? 1 : unknowns.size());
    if (unknowns.empty()) return SkewSystem{std::move(op), std::move(unknowns)};
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t cc = 0; cc < n; ++cc) {
            const std::size_t eq = r * n + cc;
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                const auto [i, j] = unknowns[u];
                Scalar coef = ring.zero();
                if (r == i) coef = coef + x.at(j, cc);
                if (r == j) coef = coef - x.at(i, cc);
                if (cc == j) coef = coef - x.at(r, i);
                if (cc == i) coef = coef + x.at(r, j);
                op.set(eq, u, std::move(coef));
            }
        }
    }
    return SkewSystem{std::move(op), std::move(unknowns)};
}

Matrix skew_from_solution(const Ring& ring, std::size_t n,
                          const std::vector<std::pair<std::size_t, std::size_t>>& unknowns,
                          const std::vector<Scalar>& sol) {
    Matrix c(ring, n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto [i, j] = unknowns[u];
        c.set(i, j, sol[u]);
        c.set(j, i, -sol[u]);
    }
    return c;
}

std::optional<Matrix> jordan_witness(const Matrix& x, const Matrix& y) {
    const SkewSystem sys = skew_commutation_operator(x);
    if (sys.unknown_cells.empty()) {
        // n = 1: only c = 0, workable iff y = 0
        if (y.is_zero()) return zeros(x.ring(), x.rows(), x.cols());
        return std::nullopt;
    }
    const SolutionSpace sol = solve_linear(sys.op, vec(y));
    if (!sol.particular) return std::nullopt;
    return skew_from_solution(x.ring(), x.rows(), sys.unknown_cells, *sol.particular);
}

} // namespace

Verdict check_local_inner_jordan(const AdditiveMap& f, const PointSet& pts, unsigned workers) {
    if (f.carrier() != Carrier::JordanSymmetric) {
        throw Error("check_local_inner_jordan applies to the Jordan carrier");
    }
    const detail::GlobalWitnessFn is_global = [&f](const Matrix& w) {
        return detail::witness_action_equals(w, f);
    };
    const detail::GlobalSolveFn global_solve = [&f]() -> std::optional<Matrix> {
        const JordanGlobalizeOutcome g = globalize_jordan(f);
        if (!g.ok()) return std::nullopt;
        return g.implementer->matrix();
    };
    return detail::run_verdict(f, pts, jordan_witness, is_global, global_solve, workers);
}

JordanGlobalizeOutcome globalize_jordan(const AdditiveMap& f) {
    if (f.carrier() != Carrier::JordanSymmetric) {
        throw Error("globalize_jordan applies to the Jordan carrier");
    }
    const Ring& ring = f.ring();
    const std::size_t n = f.n();
    if (!skew_commutant_trivial(ring, n)) {
        throw Error("internal fault: nontrivial skew commutant of H_n");
    }
    const std::vector<Matrix> basis = f.module_basis();
    const std::vector<Matrix> images = f.basis_images();

    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
    }
    if (unknowns.empty()) {
        // n = 1: the zero implementer, valid iff f vanishes on the basis
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (!images[j].is_zero()) {
                return JordanGlobalizeOutcome{
                    std::nullopt, GlobalizeFailure{"direct", "nonzero map on H_1", std::nullopt}};
            }
        }
        return JordanGlobalizeOutcome{SkewImplementer(zeros(ring, n, n)), std::nullopt};
    }

    Matrix stacked(ring, n * n * basis.size(), unknowns.size());
    std::vector<Scalar> rhs;
    rhs.reserve(n * n * basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const SkewSystem sys = skew_commutation_operator(basis[b]);
        for (std::size_t eq = 0; eq < n * n; ++eq) {
            for (std::size_t u = 0; u < unknowns.size(); ++u) {
                stacked.set(b * n * n + eq, u, sys.op.at(eq, u));
            }
        }
        for (const Scalar& s : vec(images[b])) rhs.push_back(s);
    }
    const SolutionSpace sol = solve_linear(stacked, rhs);
    if (!sol.particular) {
        return JordanGlobalizeOutcome{
            std::nullopt,
            GlobalizeFailure{"direct", "joint skew system over the Jordan basis unsolvable", std::nullopt}};
    }
    Matrix c = skew_from_solution(ring, n, unknowns, *sol.particular);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (inner_apply(c, basis[j]) != images[j]) {
            throw Error("internal fault: jordan globalizer solution fails a basis constraint");
        }
    }
    return JordanGlobalizeOutcome{SkewImplementer(std::move(c)), std::nullopt};
}

bool jordan_is_derivation(const AdditiveMap& f) {
    if (f.carrier() != Carrier::JordanSymmetric) {
        throw Error("jordan_is_derivation applies to the Jordan carrier");
    }
    const JordanVariant variant = jordan_variant(f.ring());
    const std::vector<Matrix> basis = f.module_basis();
    const std::vector<Matrix> images = f.basis_images();
    for (std::size_t s = 0; s < basis.size(); ++s) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const Matrix prod = jp(basis[s], basis[t], variant);
            const Matrix lhs = f.apply(prod);
            const Matrix rhs = jp(images[s], basis[t], variant) + jp(basis[s], images[t], variant);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool skew_commutant_trivial(const Ring& ring, std::size_t n) {
    if (n <= 1) return true;
    const Ring base = AdditiveMap::base_ring_of(ring);
    const std::size_t k = ring.kind() == RingKind::ExtensionField ? ring.spec().k : 1;
    const std::size_t d = carrier_dim(Carrier::JordanSymmetric, n) * k;
    AdditiveMap probe(ring, n, Carrier::JordanSymmetric, identity(base, d));

    std::size_t unknown_count = n * (n - 1) / 2;
    Matrix stacked(ring, n * n * d, unknown_count);
    std::vector<Scalar> rhs;
    rhs.reserve(n * n * d);
    const Scalar z = ring.zero();
    for (std::size_t b = 0; b < d; ++b) {
        const SkewSystem sys = skew_commutation_operator(probe.module_basis_element(b));
        for (std::size_t eq = 0; eq < n * n; ++eq) {
            for (std::size_t u = 0; u < unknown_count; ++u) {
                stacked.set(b * n * n + eq, u, sys.op.at(eq, u));
            }
            rhs.push_back(z);
        }
    }
    const SolutionSpace sol = solve_linear(stacked, rhs);
    for (const auto& h : sol.homogeneous) {
        for (const Scalar& s : h) {
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

} // namespace derivlab
