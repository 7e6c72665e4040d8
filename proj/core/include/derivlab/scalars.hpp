#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "derivlab/error.hpp"
#include "derivlab/rng.hpp"

namespace derivlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class RingKind {
    PrimeField,     // GF(p)
    ExtensionField, // GF(p^k), k <= 4, explicit irreducible modulus
    Rationals,      // Q
    Integers,       // Z
    IntegersMod,    // Z/m, m >= 2 (the finite rings generated by 1)
};

struct RingSpec {
    RingKind kind = RingKind::Rationals;
    Int p = 0;                 // prime, for the field kinds
    unsigned k = 1;            // extension degree
    Int m = 0;                 // modulus for IntegersMod
    std::vector<Int> modulus;  // extension modulus, low-degree-first, monic, length k+1

    static RingSpec prime_field(Int p);
    static RingSpec extension_field(Int p, unsigned k, std::vector<Int> modulus = {});
    static RingSpec rationals();
    static RingSpec integers();
    static RingSpec integers_mod(Int m);

    bool operator==(const RingSpec& o) const;
};

class Scalar;

namespace detail {
struct RingImpl;
}

/// Immutable shared handle for a scalar ring. Construction validates the
/// spec (deterministic primality check, modulus irreducibility by trial
/// factorization, m >= 2) and throws RingSpecError on violations.
class Ring {
public:
    explicit Ring(RingSpec spec);

    const RingSpec& spec() const;
    RingKind kind() const;

    bool is_field() const;
    bool is_finite() const;
    /// 0 for Q and Z, p for the field kinds, m for Z/m.
    Int characteristic() const;
    /// Element count; throws InfiniteRingError on Q and Z.
    Int cardinality() const;
    bool two_invertible() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(const Int& value) const;
    Scalar from_int(long long value) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    std::optional<Scalar> inv(const Scalar& a) const;

    /// Element of index i in the canonical enumeration of a finite ring.
    Scalar element_at(const Int& index) const;

    /// Uniform over finite rings; entries in [-9, 9] (denominators in
    /// [1, 9]) over Z and Q.
    Scalar random_scalar(Rng& rng) const;

    /// Same handle or structurally equal spec.
    bool same(const Ring& other) const;

    /// Modulus as uint64 when this is GF(p) or Z/m with p, m < 2^32;
    /// 0 otherwise. Enables exact machine-word fast paths.
    std::uint64_t small_modulus() const;

    const detail::RingImpl* impl() const { return impl_.get(); }

private:
    std::shared_ptr<const detail::RingImpl> impl_;
};

/// Creates a ring handle from a validated spec.
Ring ring_make(const RingSpec& spec);

/// An exact element of a ring, always held in canonical form: residues in
/// [0, p) or [0, m), reduced fractions with positive denominator,
/// length-k coefficient vectors over GF(p) for extension fields.
class Scalar {
public:
    using Value = std::variant<Int, Rat, std::vector<Int>>;

    Scalar(Ring ring, Value value);

    const Ring& ring() const { return ring_; }
    const Value& value() const { return value_; }

    bool is_zero() const;
    bool is_one() const;

    /// Integer payload for the Z / GF(p) / Z/m kinds.
    const Int& as_int() const;
    const Rat& as_rat() const;
    const std::vector<Int>& coeffs() const;

    /// Canonical residue as uint64; only valid when ring().small_modulus() != 0.
    std::uint64_t residue_u64() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

private:
    Ring ring_;
    Value value_;
};

Scalar operator+(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);
Scalar operator-(const Scalar& a);

inline Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
inline Scalar scalar_neg(const Scalar& a) { return -a; }
/// Returns the inverse when a is a unit, std::nullopt otherwise.
std::optional<Scalar> scalar_inv(const Scalar& a);

/// Every element of a finite ring exactly once, in deterministic order.
/// Throws InfiniteRingError over Q and Z.
std::vector<Scalar> enumerate_scalars(const Ring& ring);

/// "3", "-2/7"; extension elements render as "[c0,c1,...]".
std::string to_string(const Scalar& s);
Scalar scalar_from_string(const Ring& ring, std::string_view text);

/// Known irreducible modulus for GF(p^k) at the supported small sizes;
/// empty when no table entry exists.
std::vector<Int> default_modulus(const Int& p, unsigned k);

namespace detail {
void require_same_ring(const Scalar& a, const Scalar& b);
bool is_prime(const Int& n);
bool poly_irreducible(const Int& p, const std::vector<Int>& poly);
} // namespace detail

} // namespace derivlab
