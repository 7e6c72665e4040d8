#pragma once

#include <utility>
#include <vector>

#include "derivlab/globalize.hpp"
#include "derivlab/localcheck.hpp"

namespace derivlab {

/// Which symmetrized product the ring supports: a.b = (ab + ba)/2 when 2
/// is invertible, the doubled form ab + ba otherwise (Z, Z/even, char 2).
/// Both have the same derivations; results over doubled-product rings are
/// flagged in reports.
enum class JordanVariant { Half, Doubled };

JordanVariant jordan_variant(const Ring& ring);

/// Symmetric matrix, checked on construction.
class SymMatrix {
public:
    explicit SymMatrix(Matrix m);

    const Matrix& matrix() const { return m_; }
    const Ring& ring() const { return m_.ring(); }
    std::size_t n() const { return m_.rows(); }

    bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

private:
    Matrix m_;
};

/// (ab + ba)/2; requires invertible 2. See jordan_product_doubled for the
/// rings without it.
SymMatrix jordan_product(const SymMatrix& a, const SymMatrix& b);
SymMatrix jordan_product_doubled(const SymMatrix& a, const SymMatrix& b);
/// Dispatches on jordan_variant(ring).
SymMatrix jordan_product_auto(const SymMatrix& a, const SymMatrix& b);

/// Generators of an inner Jordan derivation sum_k [L_{a_k}, L_{b_k}].
struct JordanDerivationPairs {
    std::vector<std::pair<SymMatrix, SymMatrix>> pairs;
};

/// sum_k ( a_k . (b_k . x) - b_k . (a_k . x) ) with the ring's product.
SymMatrix inner_jordan_apply(const JordanDerivationPairs& p, const SymMatrix& x);

/// Skew-symmetric matrix with zero diagonal, checked on construction.
class SkewImplementer {
public:
    explicit SkewImplementer(Matrix c);

    const Matrix& matrix() const { return c_; }

    bool operator==(const SkewImplementer& o) const { return c_ == o.c_; }

private:
    Matrix c_;
};

/// The commutator sum (1/4) sum_k [a_k, b_k] (half variant; without the
/// 1/4 under the doubled product). Skew by symmetry of the generators,
/// and implements the pair derivation: inner_jordan_apply(p, x) = cx - xc.
SkewImplementer pairs_to_skew(const JordanDerivationPairs& p);

/// Converse: pairs whose commutator sum is exactly c, built from
/// c = sum_{i<j} c_ij [e_ii, ebar_ij].
JordanDerivationPairs skew_to_pairs(const SkewImplementer& c);

/// x |-> cx - xc restricted to H_n, as an additive map on the Jordan
/// carrier. c must be skew.
AdditiveMap jordan_map_from_skew(const Matrix& c);

AdditiveMap jordan_map_from_pairs(const JordanDerivationPairs& p);

/// Random skew implementer per module basis element, patched pointwise.
AdditiveMap gen_jordan_basis_patched(const Ring& ring, std::size_t n,
                                     const std::vector<Matrix>& skew_implementers);

/// Pointwise check on the Jordan carrier: for each symmetric x decide
/// whether a skew c with cx - xc = f(x) exists. Equivalent to the pair
/// form by pairs_to_skew / skew_to_pairs.
Verdict check_local_inner_jordan(const AdditiveMap& f, const PointSet& pts, unsigned workers = 0);

struct JordanGlobalizeOutcome {
    std::optional<SkewImplementer> implementer;
    std::optional<GlobalizeFailure> failure;

    bool ok() const { return implementer.has_value(); }
};

/// Joint skew-constrained solve over the whole Jordan module basis. The
/// skew implementer is unique (no gauge): only 0 commutes with all of H_n.
JordanGlobalizeOutcome globalize_jordan(const AdditiveMap& f);

/// Leibniz identity for the ring's Jordan product on all module basis pairs.
bool jordan_is_derivation(const AdditiveMap& f);

/// True when the only skew matrix commuting with every element of H_n is
/// zero; solved exactly, used as the gauge-freeness check.
bool skew_commutant_trivial(const Ring& ring, std::size_t n);

} // namespace derivlab
