#include <doctest.h>

#include "derivlab/scalars.hpp"

using namespace derivlab;

namespace {

Ring gf(long long p) { return Ring(RingSpec::prime_field(Int(p))); }
Ring zmod(long long m) { return Ring(RingSpec::integers_mod(Int(m))); }
Ring rationals() { return Ring(RingSpec::rationals()); }
Ring integers() { return Ring(RingSpec::integers()); }
Ring gf4() { return Ring(RingSpec::extension_field(2, 2, {Int(1), Int(1), Int(1)})); }
Ring gf8() { return Ring(RingSpec::extension_field(2, 3)); }
Ring gf9() { return Ring(RingSpec::extension_field(3, 2)); }
Ring gf27() { return Ring(RingSpec::extension_field(3, 3)); }

std::vector<Ring> all_rings() {
    return {gf(2), gf(3),  gf(5),       gf4(),      gf8(),   gf9(),
            gf27(), rationals(), integers(), zmod(4), zmod(6), zmod(9)};
}

} // namespace

TEST_CASE("ring_make accepts valid specs and reports structure") {
    const Ring f5 = gf(5);
    CHECK(f5.characteristic() == 5);
    CHECK(f5.cardinality() == 5);
    CHECK(f5.is_field());
    CHECK(f5.is_finite());

    const Ring z4 = zmod(4);
    CHECK(z4.characteristic() == 4);
    CHECK(z4.cardinality() == 4);
    CHECK(!z4.is_field());

    const Ring q = rationals();
    CHECK(q.characteristic() == 0);
    CHECK(!q.is_finite());
    CHECK_THROWS_AS(q.cardinality(), InfiniteRingError);
}

TEST_CASE("ring_make rejects invalid specs") {
    CHECK_THROWS_AS(Ring(RingSpec::prime_field(6)), RingSpecError);
    CHECK_THROWS_AS(Ring(RingSpec::prime_field(341)), RingSpecError); // 11 * 31
    CHECK_THROWS_AS(Ring(RingSpec::integers_mod(1)), RingSpecError);
    CHECK_THROWS_AS(Ring(RingSpec::integers_mod(0)), RingSpecError);
    // x^2 + 1 = (x + 1)^2 over GF(2)
    CHECK_THROWS_AS(Ring(RingSpec::extension_field(2, 2, {Int(1), Int(0), Int(1)})), RingSpecError);
    CHECK_THROWS_AS(Ring(RingSpec::extension_field(2, 5)), RingSpecError);
    CHECK_THROWS_AS(Ring(RingSpec::extension_field(2, 2, {Int(1), Int(1)})), RingSpecError);
}

TEST_CASE("scalar arithmetic matches hand values") {
    const Ring f3 = gf(3);
    CHECK(f3.from_int(2) + f3.from_int(2) == f3.from_int(1));

    const Ring q = rationals();
    const Scalar half = scalar_from_string(q, "1/2");
    const Scalar two_thirds = scalar_from_string(q, "2/3");
    CHECK(half * two_thirds == scalar_from_string(q, "1/3"));

    const Ring z4 = zmod(4);
    CHECK(z4.from_int(2) * z4.from_int(2) == z4.zero());
}

TEST_CASE("scalar_inv behaves as a unit test, not a crash") {
    CHECK(*scalar_inv(gf(5).from_int(2)) == gf(5).from_int(3));
    CHECK(!scalar_inv(zmod(4).from_int(2)).has_value());
    const Ring q = rationals();
    CHECK(*scalar_inv(scalar_from_string(q, "3/7")) == scalar_from_string(q, "7/3"));
    CHECK(!scalar_inv(q.zero()).has_value());
    CHECK(!scalar_inv(integers().from_int(2)).has_value());
    CHECK(*scalar_inv(integers().from_int(-1)) == integers().from_int(-1));
}

TEST_CASE("enumerate_scalars lists each element once in a fixed order") {
    const auto f2 = enumerate_scalars(gf(2));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].is_zero());
    CHECK(f2[1].is_one());

    const auto z4 = enumerate_scalars(zmod(4));
    REQUIRE(z4.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(z4[i] == zmod(4).from_int(i));

    CHECK_THROWS_AS(enumerate_scalars(rationals()), InfiniteRingError);
    CHECK_THROWS_AS(enumerate_scalars(integers()), InfiniteRingError);
}

TEST_CASE("ring axioms hold exactly on random triples") {
    for (const Ring& ring : all_rings()) {
        Rng rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            const Scalar x = ring.random_scalar(rng);
            const Scalar y = ring.random_scalar(rng);
            const Scalar z = ring.random_scalar(rng);
            CHECK((x + y) + z == x + (y + z));
            CHECK(x + y == y + x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x * y == y * x);
            CHECK(x + ring.zero() == x);
            CHECK(x * ring.one() == x);
            CHECK(x + (-x) == ring.zero());
        }
    }
}

TEST_CASE("finite enumerations are closed and have the declared size") {
    for (const Ring& ring : {gf4(), gf9(), zmod(6)}) {
        const auto all = enumerate_scalars(ring);
        CHECK(Int(all.size()) == ring.cardinality());
        auto member = [&](const Scalar& s) {
            for (const Scalar& t : all) {
                if (t == s) return true;
            }
            return false;
        };
        for (const Scalar& a : all) {
            for (const Scalar& b : all) {
                CHECK(member(a + b));
                CHECK(member(a * b));
            }
        }
    }
}

TEST_CASE("invertibility agrees with brute-force unit search on small rings") {
    const Ring gf16 = Ring(RingSpec::extension_field(2, 4));
    for (const Ring& ring : {gf(7), zmod(12), gf16, zmod(251)}) {
        const auto all = enumerate_scalars(ring);
        for (const Scalar& x : all) {
            bool unit = false;
            for (const Scalar& y : all) {
                if ((x * y).is_one()) {
                    unit = true;
                    break;
                }
            }
            const auto inv = scalar_inv(x);
            CHECK(inv.has_value() == unit);
            if (inv) CHECK((x * *inv).is_one());
        }
    }
}

TEST_CASE("extension field arithmetic follows the modulus") {
    const Ring f4 = gf4(); // x^2 + x + 1
    const Scalar w = Scalar(f4, std::vector<Int>{Int(0), Int(1)});
    const Scalar w2 = w * w;
    CHECK(w2 == Scalar(f4, std::vector<Int>{Int(1), Int(1)})); // w^2 = w + 1
    CHECK(w * w2 == f4.one());                                  // w^3 = 1
    CHECK(*scalar_inv(w) == w2);

    const Ring f9 = gf9();
    const auto all = enumerate_scalars(f9);
    CHECK(all.size() == 9);
    CHECK(f9.two_invertible());
    CHECK(!f4.two_invertible());
}

TEST_CASE("canonical forms and string round trips") {
    CHECK(gf(5).from_int(-3) == gf(5).from_int(2));
    CHECK(zmod(6).from_int(17) == zmod(6).from_int(5));
    const Ring q = rationals();
    CHECK(scalar_from_string(q, "4/8") == scalar_from_string(q, "1/2"));
    CHECK(to_string(scalar_from_string(q, "-4/6")) == "-2/3");

    for (const Ring& ring : all_rings()) {
        Rng rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const Scalar s = ring.random_scalar(rng);
            CHECK(scalar_from_string(ring, to_string(s)) == s);
        }
    }
    CHECK_THROWS_AS(scalar_from_string(gf(5), "abc"), ParseError);
    CHECK_THROWS_AS(scalar_from_string(gf(5), "1/2"), ParseError);
    CHECK_THROWS_AS(scalar_from_string(rationals(), "1/0"), ParseError);
}

TEST_CASE("ring mismatch is detected") {
    CHECK_THROWS_AS(gf(3).from_int(1) + gf(5).from_int(1), RingMismatchError);
    // structurally equal specs are interoperable even as distinct handles
    CHECK(gf(3).from_int(2) + Ring(RingSpec::prime_field(3)).from_int(2) == gf(3).from_int(1));
}

TEST_CASE("two_invertible matches the ring structure") {
    CHECK(!gf(2).two_invertible());
    CHECK(gf(3).two_invertible());
    CHECK(rationals().two_invertible());
    CHECK(!integers().two_invertible());
    CHECK(!zmod(4).two_invertible());
    CHECK(zmod(9).two_invertible());
}
