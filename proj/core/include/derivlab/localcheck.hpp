#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "derivlab/derivations.hpp"

namespace derivlab {

enum class Carrier {
    FullMatrixAlgebra,
    JordanSymmetric,
};

/// Number of ring-valued coordinates of the carrier: n^2 for the full
/// algebra, n(n+1)/2 for the symmetric matrices.
std::size_t carrier_dim(Carrier carrier, std::size_t n);

/// An additive self-map of M_n(R) or H_n(R), stored as a linear action
/// over the prime ring on the canonical module basis. Over GF(p^k) each
/// basis element splits across a fixed GF(p)-basis of the field, so the
/// action is GF(p)-linear but need not be GF(p^k)-linear: the
/// additive-but-not-homogeneous maps.
///
/// Module basis order: carrier basis elements in canonical order (matrix
/// units row-major for the full algebra; e_00..e_{n-1,n-1} then the
/// symmetrized units ebar_ij, i < j, row-major, for the Jordan carrier),
/// each followed by its k field-basis multiples w^0 b, w^1 b, ...
class AdditiveMap {
public:
    AdditiveMap(Ring ring, std::size_t n, Carrier carrier, Matrix action);

    const Ring& ring() const { return ring_; }
    const Ring& base_ring() const { return base_; }
    std::size_t n() const { return n_; }
    Carrier carrier() const { return carrier_; }
    unsigned ext_degree() const { return k_; }
    std::size_t module_dim() const { return dim_ * k_; }
    std::size_t points_dim() const { return dim_; }
    const Matrix& action() const { return action_; }

    Matrix module_basis_element(std::size_t index) const;
    std::vector<Matrix> module_basis() const;

    /// Base-ring coordinates of a carrier element; rejects points outside
    /// the carrier (non-symmetric, wrong shape or ring).
    std::vector<Scalar> coords(const Matrix& x) const;
    Matrix matrix_from_coords(const std::vector<Scalar>& c) const;

    Matrix apply(const Matrix& x) const;
    std::vector<Matrix> basis_images() const;

    bool operator==(const AdditiveMap& o) const;
    bool operator!=(const AdditiveMap& o) const { return !(*this == o); }

    /// The prime ring the action lives over: GF(p) under GF(p^k), the ring
    /// itself otherwise.
    static Ring base_ring_of(const Ring& ring);

private:
    Ring ring_;
    Ring base_;
    std::size_t n_;
    Carrier carrier_;
    unsigned k_;
    std::size_t dim_;
    Matrix action_;
};

/// x |-> ax - xa on the full algebra, in action form.
AdditiveMap map_from_inner(const Matrix& a);

/// The unique prime-ring-linear extension of the given basis images.
AdditiveMap map_from_basis_images(const Ring& ring, std::size_t n, Carrier carrier,
                                  const std::vector<Matrix>& images);

inline Matrix apply_map(const AdditiveMap& f, const Matrix& x) { return f.apply(x); }

/// f(b) = inner_apply(a_b, b) for one implementer per module basis
/// element, extended linearly. Pointwise witnesses that need not glue.
AdditiveMap gen_basis_patched(const Ring& ring, std::size_t n,
                              const std::vector<Matrix>& implementers);

/// Leibniz test on all pairs of module basis elements; decides the
/// identity on the whole algebra by biadditivity. Full carrier only.
bool is_derivation(const AdditiveMap& f);

struct PointSet {
    enum class Mode { Exhaustive, Sampled, Explicit };

    Mode mode = Mode::Exhaustive;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::vector<Matrix> points;

    static PointSet exhaustive();
    static PointSet sampled(std::size_t count, std::uint64_t seed);
    static PointSet explicit_points(std::vector<Matrix> pts);
};

/// Exhaustive point enumerations are rejected beyond this many points.
inline constexpr std::size_t kExhaustivePointBudget = std::size_t(1) << 20;

struct Verdict {
    enum class Outcome { CertifiedAccept, ProbabilisticAccept, Reject };

    Outcome outcome = Outcome::Reject;
    std::optional<Matrix> witness;
    /// Deterministic: total points on accept, witness position + 1 on reject.
    std::size_t checked_points = 0;
    std::uint64_t seed = 0;
    /// Schedule-dependent solver statistics, informational only.
    std::size_t full_solves = 0;
    std::size_t witness_reuses = 0;

    bool accepted() const { return outcome != Outcome::Reject; }
};

/// Pointwise witness check on the full algebra: for each x in pts decide
/// whether ax - xa = f(x) has a solution. Certified only in exhaustive
/// mode. Reject carries the first failing point in canonical order,
/// re-verified unsolvable before reporting.
Verdict check_local_inner(const AdditiveMap& f, const PointSet& pts, unsigned workers = 0);

/// The deterministic sampled point list used by PointSet::Mode::Sampled:
/// scaled units, the diagonal/off-diagonal pair, triple and quadruple
/// shapes, cross pairs of units, superdiagonal partial sums, then seeded
/// uniform points up to at least `count`.
std::vector<Matrix> sampled_points(const Ring& ring, std::size_t n, Carrier carrier,
                                   std::size_t count, std::uint64_t seed);

} // namespace derivlab
