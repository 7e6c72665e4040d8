#include "derivlab/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace derivlab {

namespace mp = boost::multiprecision;

namespace detail {

struct RingImpl {
    RingSpec spec;
    std::uint64_t small_mod = 0; // nonzero for GF(p) / Z/m with modulus < 2^32
    Int cardinality = 0;         // 0 when infinite
};

void require_same_ring(const Scalar& a, const Scalar& b) {
    if (!a.ring().same(b.ring())) {
        throw RingMismatchError("scalar operands belong to different rings");
    }
}

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
    return mp::powm(base, exp, mod);
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned r) {
    Int x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

// Extended Euclid; returns inverse of a modulo m when gcd(a, m) = 1.
std::optional<Int> mod_inverse(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = std::exchange(r1, std::move(r2));
        Int t2 = t0 - q * t1;
        t0 = std::exchange(t1, std::move(t2));
    }
    if (r0 != 1) return std::nullopt;
    if (t0 < 0) t0 += m;
    return t0;
}

// --- polynomial helpers over GF(p), low-degree-first coefficient lists ---

void poly_trim(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<Int> poly_mod(std::vector<Int> f, const std::vector<Int>& g, const Int& p) {
    poly_trim(f);
    const std::size_t dg = g.size() - 1;
    const std::optional<Int> lead_inv = mod_inverse(g.back(), p);
    while (f.size() > dg) {
        const std::size_t shift = f.size() - 1 - dg;
        Int factor = (f.back() * *lead_inv) % p;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = ((f[shift + i] - factor * g[i]) % p + p) % p;
        }
        poly_trim(f);
    }
    return f;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    poly_trim(out);
    return out;
}

// Inverse of f modulo g in GF(p)[x] via extended Euclid.
std::optional<std::vector<Int>> poly_mod_inverse(std::vector<Int> f, std::vector<Int> g, const Int& p) {
    poly_trim(f);
    if (f.empty()) return std::nullopt;
    std::vector<Int> r0 = g, r1 = f;
    std::vector<Int> t0, t1 = {Int(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<Int> q;
        std::vector<Int> rem = r0;
        const std::optional<Int> lead_inv = mod_inverse(r1.back(), p);
        if (!lead_inv) return std::nullopt; // can happen only if p not prime
        while (rem.size() >= r1.size() && !rem.empty()) {
            const std::size_t shift = rem.size() - r1.size();
            Int factor = (rem.back() * *lead_inv) % p;
            if (q.size() < shift + 1) q.resize(shift + 1, Int(0));
            q[shift] = factor;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[shift + i] = ((rem[shift + i] - factor * r1[i]) % p + p) % p;
            }
            poly_trim(rem);
        }
        r0 = std::exchange(r1, std::move(rem));
        // t2 = t0 - q * t1
        std::vector<Int> qt1 = poly_mul(q, t1, p);
        std::vector<Int> t2 = t0;
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), Int(0));
        for (std::size_t i = 0; i < qt1.size(); ++i) {
            t2[i] = ((t2[i] - qt1[i]) % p + p) % p;
        }
        poly_trim(t2);
        t0 = std::exchange(t1, std::move(t2));
    }
    // r0 = gcd; invertible iff gcd is a nonzero constant
    if (r0.size() != 1) return std::nullopt;
    const std::optional<Int> c = mod_inverse(r0[0], p);
    if (!c) return std::nullopt;
    for (auto& coef : t0) coef = (coef * *c) % p;
    poly_trim(t0);
    return poly_mod(std::move(t0), g, p);
}

std::vector<Int> canonical_coeffs(std::vector<Int> c, const Int& p, unsigned k) {
    c.resize(k, Int(0));
    for (auto& x : c) {
        x %= p;
        if (x < 0) x += p;
    }
    return c;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                       41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (int q : small_primes) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin: this base set decides primality for all
    // n < 3.317e24, far beyond anything this tool enumerates.
    static const Int bound("3317044064679887385961981");
    if (n >= bound) {
        throw RingSpecError("primality check supports p < 3.317e24 only");
    }
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, Int(a), d, r)) return false;
    }
    return true;
}

bool poly_irreducible(const Int& p, const std::vector<Int>& poly) {
    // Trial factorization: a polynomial of degree <= 4 is reducible iff it
    // has a monic factor of degree 1 or 2.
    std::vector<Int> f = poly;
    poly_trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg > 4) return false;
    if (deg == 1) return true;
    for (std::size_t d = 1; d <= 2 && d <= deg / 2; ++d) {
        std::vector<Int> g(d + 1, Int(0));
        g[d] = 1;
        // iterate all p^d choices of lower coefficients
        Int total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (Int idx = 0; idx < total; ++idx) {
            Int rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace detail

// --- RingSpec ---

RingSpec RingSpec::prime_field(Int p) {
    RingSpec s;
    s.kind = RingKind::PrimeField;
    s.p = std::move(p);
    return s;
}

RingSpec RingSpec::extension_field(Int p, unsigned k, std::vector<Int> modulus) {
    RingSpec s;
    s.kind = RingKind::ExtensionField;
    s.p = std::move(p);
    s.k = k;
    s.modulus = modulus.empty() ? default_modulus(s.p, k) : std::move(modulus);
    return s;
}

RingSpec RingSpec::rationals() {
    RingSpec s;
    s.kind = RingKind::Rationals;
    return s;
}

RingSpec RingSpec::integers() {
    RingSpec s;
    s.kind = RingKind::Integers;
    return s;
}

RingSpec RingSpec::integers_mod(Int m) {
    RingSpec s;
    s.kind = RingKind::IntegersMod;
    s.m = std::move(m);
    return s;
}

bool RingSpec::operator==(const RingSpec& o) const {
    return kind == o.kind && p == o.p && k == o.k && m == o.m && modulus == o.modulus;
}

std::vector<Int> default_modulus(const Int& p, unsigned k) {
    if (k < 1 || k > 4 || p > (1 << 20) || !detail::is_prime(p)) return {};
    // smallest monic irreducible in the mixed-radix order of the low coefficients
    std::vector<Int> f(k + 1, Int(0));
    f[k] = 1;
    Int total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (Int idx = 0; idx < total; ++idx) {
        Int rest = idx;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = rest % p;
            rest /= p;
        }
        if (detail::poly_irreducible(p, f)) return f;
    }
    return {};
}

// --- Ring ---

Ring::Ring(RingSpec spec) {
    auto impl = std::make_shared<detail::RingImpl>();
    switch (spec.kind) {
        case RingKind::PrimeField:
            if (!detail::is_prime(spec.p)) {
                throw RingSpecError("prime-field modulus is not prime: " + spec.p.str());
            }
            spec.k = 1;
            impl->cardinality = spec.p;
            if (spec.p < (Int(1) << 32)) impl->small_mod = spec.p.convert_to<std::uint64_t>();
            break;
        case RingKind::ExtensionField: {
            if (!detail::is_prime(spec.p)) {
                throw RingSpecError("extension-field characteristic is not prime: " + spec.p.str());
            }
            if (spec.k < 1 || spec.k > 4) {
                throw RingSpecError("extension degree k must be in [1, 4]");
            }
            if (spec.modulus.size() != spec.k + 1) {
                throw RingSpecError("modulus polynomial must have degree k");
            }
            std::vector<Int> canon;
            canon.reserve(spec.modulus.size());
            for (const Int& c : spec.modulus) {
                Int r = c % spec.p;
                if (r < 0) r += spec.p;
                canon.push_back(std::move(r));
            }
            if (canon.back() != 1) {
                throw RingSpecError("modulus polynomial must be monic");
            }
            if (!detail::poly_irreducible(spec.p, canon)) {
                throw RingSpecError("modulus polynomial is reducible over GF(p)");
            }
            spec.modulus = std::move(canon);
            impl->cardinality = 1;
            for (unsigned i = 0; i < spec.k; ++i) impl->cardinality *= spec.p;
            break;
        }
        case RingKind::Rationals:
        case RingKind::Integers:
            break;
        case RingKind::IntegersMod:
            if (spec.m < 2) {
                throw RingSpecError("integers-mod modulus must be >= 2");
            }
            impl->cardinality = spec.m;
            if (spec.m < (Int(1) << 32)) impl->small_mod = spec.m.convert_to<std::uint64_t>();
            break;
    }
    impl->spec = std::move(spec);
    impl_ = std::move(impl);
}

Ring ring_make(const RingSpec& spec) { return Ring(spec); }

const RingSpec& Ring::spec() const { return impl_->spec; }
RingKind Ring::kind() const { return impl_->spec.kind; }

bool Ring::is_field() const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::ExtensionField:
        case RingKind::Rationals:
            return true;
        default:
            return false;
    }
}

bool Ring::is_finite() const {
    switch (kind()) {
        case RingKind::Rationals:
        case RingKind::Integers:
            return false;
        default:
            return true;
    }
}

Int Ring::characteristic() const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::ExtensionField:
            return impl_->spec.p;
        case RingKind::IntegersMod:
            return impl_->spec.m;
        default:
            return 0;
    }
}

Int Ring::cardinality() const {
    if (!is_finite()) throw InfiniteRingError("cardinality of an infinite ring");
    return impl_->cardinality;
}

bool Ring::two_invertible() const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::ExtensionField:
            return impl_->spec.p != 2;
        case RingKind::Rationals:
            return true;
        case RingKind::Integers:
            return false;
        case RingKind::IntegersMod:
            return impl_->spec.m % 2 != 0;
    }
    return false;
}

std::uint64_t Ring::small_modulus() const { return impl_->small_mod; }

bool Ring::same(const Ring& other) const {
    return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
}

Scalar Ring::zero() const { return from_int(0); }
Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long long value) const { return from_int(Int(value)); }

Scalar Ring::from_int(const Int& value) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            const Int& mod = kind() == RingKind::PrimeField ? impl_->spec.p : impl_->spec.m;
            Int r = value % mod;
            if (r < 0) r += mod;
            return Scalar(*this, std::move(r));
        }
        case RingKind::ExtensionField: {
            Int r = value % impl_->spec.p;
            if (r < 0) r += impl_->spec.p;
            std::vector<Int> c(impl_->spec.k, Int(0));
            c[0] = std::move(r);
            return Scalar(*this, std::move(c));
        }
        case RingKind::Rationals:
            return Scalar(*this, Rat(value));
        case RingKind::Integers:
            return Scalar(*this, value);
    }
    throw Error("unreachable ring kind");
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            if (impl_->small_mod) {
                const std::uint64_t r = (a.residue_u64() + b.residue_u64()) % impl_->small_mod;
                return Scalar(*this, Int(r));
            }
            const Int& mod = kind() == RingKind::PrimeField ? impl_->spec.p : impl_->spec.m;
            Int r = a.as_int() + b.as_int();
            if (r >= mod) r -= mod;
            return Scalar(*this, std::move(r));
        }
        case RingKind::ExtensionField: {
            const Int& p = impl_->spec.p;
            std::vector<Int> c = a.coeffs();
            const auto& d = b.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                c[i] += d[i];
                if (c[i] >= p) c[i] -= p;
            }
            return Scalar(*this, std::move(c));
        }
        case RingKind::Rationals:
            return Scalar(*this, Rat(a.as_rat() + b.as_rat()));
        case RingKind::Integers:
            return Scalar(*this, Int(a.as_int() + b.as_int()));
    }
    throw Error("unreachable ring kind");
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            if (impl_->small_mod) {
                const std::uint64_t r = (a.residue_u64() * b.residue_u64()) % impl_->small_mod;
                return Scalar(*this, Int(r));
            }
            const Int& mod = kind() == RingKind::PrimeField ? impl_->spec.p : impl_->spec.m;
            return Scalar(*this, Int((a.as_int() * b.as_int()) % mod));
        }
        case RingKind::ExtensionField: {
            const Int& p = impl_->spec.p;
            auto prod = detail::poly_mul(a.coeffs(), b.coeffs(), p);
            prod = detail::poly_mod(std::move(prod), impl_->spec.modulus, p);
            return Scalar(*this, detail::canonical_coeffs(std::move(prod), p, impl_->spec.k));
        }
        case RingKind::Rationals:
            return Scalar(*this, Rat(a.as_rat() * b.as_rat()));
        case RingKind::Integers:
            return Scalar(*this, Int(a.as_int() * b.as_int()));
    }
    throw Error("unreachable ring kind");
}

Scalar Ring::neg(const Scalar& a) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            const Int& mod = kind() == RingKind::PrimeField ? impl_->spec.p : impl_->spec.m;
            if (a.as_int() == 0) return a;
            return Scalar(*this, Int(mod - a.as_int()));
        }
        case RingKind::ExtensionField: {
            const Int& p = impl_->spec.p;
            std::vector<Int> c = a.coeffs();
            for (auto& x : c) {
                if (x != 0) x = p - x;
            }
            return Scalar(*this, std::move(c));
        }
        case RingKind::Rationals:
            return Scalar(*this, Rat(-a.as_rat()));
        case RingKind::Integers:
            return Scalar(*this, Int(-a.as_int()));
    }
    throw Error("unreachable ring kind");
}

std::optional<Scalar> Ring::inv(const Scalar& a) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            const Int& mod = kind() == RingKind::PrimeField ? impl_->spec.p : impl_->spec.m;
            auto r = detail::mod_inverse(a.as_int(), mod);
            if (!r) return std::nullopt;
            return Scalar(*this, std::move(*r));
        }
        case RingKind::ExtensionField: {
            auto r = detail::poly_mod_inverse(a.coeffs(), impl_->spec.modulus, impl_->spec.p);
            if (!r) return std::nullopt;
            return Scalar(*this, detail::canonical_coeffs(std::move(*r), impl_->spec.p, impl_->spec.k));
        }
        case RingKind::Rationals: {
            if (a.as_rat() == 0) return std::nullopt;
            return Scalar(*this, Rat(1 / a.as_rat()));
        }
        case RingKind::Integers: {
            if (a.as_int() == 1 || a.as_int() == -1) return a;
            return std::nullopt;
        }
    }
    throw Error("unreachable ring kind");
}

Scalar Ring::element_at(const Int& index) const {
    if (!is_finite()) throw InfiniteRingError("element_at on an infinite ring");
    if (index < 0 || index >= impl_->cardinality) {
        throw Error("element index out of range");
    }
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
            return Scalar(*this, Int(index));
        case RingKind::ExtensionField: {
            std::vector<Int> c(impl_->spec.k, Int(0));
            Int rest = index;
            for (unsigned i = 0; i < impl_->spec.k; ++i) {
                c[i] = rest % impl_->spec.p;
                rest /= impl_->spec.p;
            }
            return Scalar(*this, std::move(c));
        }
        default:
            throw Error("unreachable ring kind");
    }
}

Scalar Ring::random_scalar(Rng& rng) const {
    switch (kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod:
        case RingKind::ExtensionField:
            return element_at(rng.bounded_int(impl_->cardinality));
        case RingKind::Integers:
            return from_int(rng.range(-9, 9));
        case RingKind::Rationals: {
            const Int num(rng.range(-9, 9));
            const Int den(rng.range(1, 9));
            return Scalar(*this, Rat(num, den));
        }
    }
    throw Error("unreachable ring kind");
}

// --- Scalar ---

Scalar::Scalar(Ring ring, Value value) : ring_(std::move(ring)), value_(std::move(value)) {
    switch (ring_.kind()) {
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            const Int& mod = ring_.kind() == RingKind::PrimeField ? ring_.spec().p : ring_.spec().m;
            Int& v = std::get<Int>(value_);
            if (v < 0 || v >= mod) {
                v %= mod;
                if (v < 0) v += mod;
            }
            break;
        }
        case RingKind::ExtensionField: {
            auto& c = std::get<std::vector<Int>>(value_);
            value_ = detail::canonical_coeffs(std::move(c), ring_.spec().p, ring_.spec().k);
            break;
        }
        case RingKind::Rationals:
            std::get<Rat>(value_); // shape check; cpp_rational self-normalizes
            break;
        case RingKind::Integers:
            std::get<Int>(value_);
            break;
    }
}

bool Scalar::is_zero() const {
    switch (ring_.kind()) {
        case RingKind::Rationals:
            return as_rat() == 0;
        case RingKind::ExtensionField:
            return std::all_of(coeffs().begin(), coeffs().end(), [](const Int& c) { return c == 0; });
        default:
            return as_int() == 0;
    }
}

bool Scalar::is_one() const {
    switch (ring_.kind()) {
        case RingKind::Rationals:
            return as_rat() == 1;
        case RingKind::ExtensionField: {
            const auto& c = coeffs();
            if (c[0] != 1) return false;
            return std::all_of(c.begin() + 1, c.end(), [](const Int& x) { return x == 0; });
        }
        default:
            return as_int() == 1;
    }
}

const Int& Scalar::as_int() const { return std::get<Int>(value_); }
const Rat& Scalar::as_rat() const { return std::get<Rat>(value_); }
const std::vector<Int>& Scalar::coeffs() const { return std::get<std::vector<Int>>(value_); }

std::uint64_t Scalar::residue_u64() const { return as_int().convert_to<std::uint64_t>(); }

bool Scalar::operator==(const Scalar& o) const {
    detail::require_same_ring(*this, o);
    return value_ == o.value_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    detail::require_same_ring(a, b);
    return a.ring().add(a, b);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    detail::require_same_ring(a, b);
    return a.ring().sub(a, b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    detail::require_same_ring(a, b);
    return a.ring().mul(a, b);
}

Scalar operator-(const Scalar& a) { return a.ring().neg(a); }

std::optional<Scalar> scalar_inv(const Scalar& a) { return a.ring().inv(a); }

std::vector<Scalar> enumerate_scalars(const Ring& ring) {
    if (!ring.is_finite()) throw InfiniteRingError("enumerate_scalars on an infinite ring");
    const Int card = ring.cardinality();
    if (card > (Int(1) << 24)) {
        throw BudgetError("enumerate_scalars: ring too large to materialize");
    }
    std::vector<Scalar> out;
    out.reserve(card.convert_to<std::size_t>());
    for (Int i = 0; i < card; ++i) out.push_back(ring.element_at(i));
    return out;
}

std::string to_string(const Scalar& s) {
    switch (s.ring().kind()) {
        case RingKind::Rationals: {
            const Rat& r = s.as_rat();
            if (denominator(r) == 1) return numerator(r).str();
            return numerator(r).str() + "/" + denominator(r).str();
        }
        case RingKind::ExtensionField: {
            std::ostringstream os;
            os << '[';
            const auto& c = s.coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) os << ',';
                os << c[i].str();
            }
            os << ']';
            return os.str();
        }
        default:
            return s.as_int().str();
    }
}

namespace {

bool valid_integer_token(std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

Int parse_int(std::string_view t) {
    if (!valid_integer_token(t)) {
        throw ParseError("invalid integer literal: '" + std::string(t) + "'");
    }
    return Int(std::string(t));
}

std::string_view trim(std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
}

} // namespace

Scalar scalar_from_string(const Ring& ring, std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw ParseError("empty scalar literal");
    if (t.front() == '[') {
        if (ring.kind() != RingKind::ExtensionField) {
            throw ParseError("coefficient-list scalars are only valid over extension fields");
        }
        if (t.back() != ']') throw ParseError("unterminated coefficient list");
        std::vector<Int> coeffs;
        std::string_view body = t.substr(1, t.size() - 2);
        while (!body.empty()) {
            const std::size_t comma = body.find(',');
            const std::string_view tok = trim(body.substr(0, comma));
            coeffs.push_back(parse_int(tok));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        if (coeffs.size() > ring.spec().k) {
            throw ParseError("coefficient list longer than extension degree");
        }
        return Scalar(ring, std::move(coeffs));
    }
    const std::size_t slash = t.find('/');
    if (slash != std::string_view::npos) {
        if (ring.kind() != RingKind::Rationals) {
            throw ParseError("fraction literals are only valid over the rationals");
        }
        const Int num = parse_int(trim(t.substr(0, slash)));
        const Int den = parse_int(trim(t.substr(slash + 1)));
        if (den == 0) throw ParseError("zero denominator");
        return Scalar(ring, Rat(num, den));
    }
    return ring.from_int(parse_int(t));
}

} // namespace derivlab
