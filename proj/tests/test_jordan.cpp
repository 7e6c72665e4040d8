#include <doctest.h>

#include "derivlab/jordan.hpp"

using namespace derivlab;

namespace {

Ring gf(long long p) { return Ring(RingSpec::prime_field(Int(p))); }
Ring zmod(long long m) { return Ring(RingSpec::integers_mod(Int(m))); }
Ring rationals() { return Ring(RingSpec::rationals()); }
Ring integers() { return Ring(RingSpec::integers()); }
Ring gf9() { return Ring(RingSpec::extension_field(3, 2)); }

Matrix ebar(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
    return unit(ring, n, i, j) + unit(ring, n, j, i);
}

std::vector<Matrix> all_symmetric(const Ring& ring, std::size_t n) {
    const auto scalars = enumerate_scalars(ring);
    const std::size_t dim = n * (n + 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) cells.emplace_back(i, i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    }
    std::vector<Matrix> out;
    std::vector<std::size_t> digits(dim, 0);
    for (;;) {
        Matrix m(ring, n, n);
        for (std::size_t p = 0; p < dim; ++p) {
            m.set(cells[p].first, cells[p].second, scalars[digits[p]]);
            m.set(cells[p].second, cells[p].first, scalars[digits[p]]);
        }
        out.push_back(std::move(m));
        std::size_t pos = 0;
        while (pos < dim && ++digits[pos] == scalars.size()) digits[pos++] = 0;
        if (pos == dim) break;
    }
    return out;
}

std::vector<Matrix> all_skew(const Ring& ring, std::size_t n) {
    const auto scalars = enumerate_scalars(ring);
    const std::size_t dim = n * (n - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    }
    std::vector<Matrix> out;
    std::vector<std::size_t> digits(dim, 0);
    for (;;) {
        Matrix m(ring, n, n);
        for (std::size_t p = 0; p < dim; ++p) {
            m.set(cells[p].first, cells[p].second, scalars[digits[p]]);
            m.set(cells[p].second, cells[p].first, -scalars[digits[p]]);
        }
        out.push_back(std::move(m));
        if (dim == 0) break;
        std::size_t pos = 0;
        while (pos < dim && ++digits[pos] == scalars.size()) digits[pos++] = 0;
        if (pos == dim) break;
    }
    return out;
}

} // namespace

TEST_CASE("jordan_product matches hand values") {
    const Ring q = rationals();
    const SymMatrix e00{unit(q, 2, 0, 0)};
    const SymMatrix e11{unit(q, 2, 1, 1)};
    const SymMatrix eb{ebar(q, 2, 0, 1)};
    const Scalar half = *scalar_inv(q.from_int(2));
    CHECK(jordan_product(e00, eb).matrix() == mat_scale(half, eb.matrix()));
    CHECK(jordan_product(e00, e00) == e00);
    CHECK(jordan_product(e00, e11).matrix().is_zero());
    CHECK(jordan_product(e00, eb) == jordan_product(eb, e00));

    const Ring z = integers();
    CHECK_THROWS_AS(jordan_product(SymMatrix(identity(z, 2)), SymMatrix(identity(z, 2))), Error);
    CHECK(jordan_product_doubled(SymMatrix(identity(z, 2)), SymMatrix(identity(z, 2))).matrix() ==
          mat_scale(z.from_int(2), identity(z, 2)));
}

TEST_CASE("inner_jordan_apply expands the multiplication-operator bracket") {
    const Ring q = rationals();
    const SymMatrix e00{unit(q, 2, 0, 0)};
    const SymMatrix eb{ebar(q, 2, 0, 1)};
    JordanDerivationPairs p;
    p.pairs.emplace_back(e00, eb);
    const Scalar quarter = *scalar_inv(q.from_int(4));
    CHECK(inner_jordan_apply(p, e00).matrix() == mat_scale(-quarter, eb.matrix()));

    JordanDerivationPairs same;
    same.pairs.emplace_back(eb, eb);
    Rng rng(3);
    CHECK(inner_jordan_apply(same, SymMatrix(random_symmetric(q, 2, rng))).matrix().is_zero());
    CHECK(inner_jordan_apply(p, SymMatrix(identity(q, 2))).matrix().is_zero());
}

TEST_CASE("pairs_to_skew is the quarter commutator sum") {
    const Ring q = rationals();
    const SymMatrix e00{unit(q, 2, 0, 0)};
    const SymMatrix eb{ebar(q, 2, 0, 1)};
    JordanDerivationPairs p;
    p.pairs.emplace_back(e00, eb);
    const Scalar quarter = *scalar_inv(q.from_int(4));
    CHECK(pairs_to_skew(p).matrix() ==
          mat_scale(quarter, unit(q, 2, 0, 1) - unit(q, 2, 1, 0)));

    JordanDerivationPairs same;
    same.pairs.emplace_back(e00, e00);
    CHECK(pairs_to_skew(same).matrix().is_zero());

    JordanDerivationPairs anti;
    anti.pairs.emplace_back(e00, eb);
    anti.pairs.emplace_back(eb, e00);
    CHECK(pairs_to_skew(anti).matrix().is_zero());
}

TEST_CASE("commutator sums of symmetric pairs are skew and implement the derivation") {
    for (const Ring& ring : {gf(3), gf(5), gf(7), rationals(), zmod(5), zmod(9), gf9()}) {
        Rng rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 2 + rng.bounded(4); // up to 5
            JordanDerivationPairs p;
            const std::size_t count = 1 + rng.bounded(3);
            for (std::size_t k = 0; k < count; ++k) {
                p.pairs.emplace_back(SymMatrix(random_symmetric(ring, n, rng)),
                                     SymMatrix(random_symmetric(ring, n, rng)));
            }
            Matrix sum = zeros(ring, n, n);
            for (const auto& [a, b] : p.pairs) sum = sum + commutator(a.matrix(), b.matrix());
            CHECK(is_skew(sum));

            const SkewImplementer c = pairs_to_skew(p);
            CHECK(is_skew(c.matrix()));
            // bridge identity on every Jordan basis element
            for (std::size_t i = 0; i < n; ++i) {
                const SymMatrix e{unit(ring, n, i, i)};
                CHECK(inner_jordan_apply(p, e).matrix() == inner_apply(c.matrix(), e.matrix()));
                for (std::size_t j = i + 1; j < n; ++j) {
                    const SymMatrix b{ebar(ring, n, i, j)};
                    CHECK(inner_jordan_apply(p, b).matrix() == inner_apply(c.matrix(), b.matrix()));
                }
            }
        }
    }
}

TEST_CASE("skew_to_pairs inverts pairs_to_skew") {
    for (const Ring& ring : {gf(3), rationals(), zmod(5), integers(), zmod(4)}) {
        Rng rng(13);
        for (std::size_t n = 2; n <= 5; ++n) {
            for (int trial = 0; trial < 10; ++trial) {
                const SkewImplementer c{random_skew(ring, n, rng)};
                CHECK(pairs_to_skew(skew_to_pairs(c)) == c);
            }
        }
    }
    // zero maps to the trivial pair
    const SkewImplementer z{zeros(gf(3), 2, 2)};
    const JordanDerivationPairs p = skew_to_pairs(z);
    REQUIRE(p.pairs.size() == 1);
    CHECK(p.pairs[0].first.matrix().is_zero());
    CHECK(pairs_to_skew(p).matrix().is_zero());
}

TEST_CASE("the Jordan checker certifies skew-implemented maps exhaustively") {
    const Ring f3 = gf(3);
    const Matrix c = unit(f3, 2, 0, 1) - unit(f3, 2, 1, 0);
    const AdditiveMap f = jordan_map_from_skew(c);
    const Verdict v = check_local_inner_jordan(f, PointSet::exhaustive());
    CHECK(v.outcome == Verdict::Outcome::CertifiedAccept);
    CHECK(v.checked_points == 27);
}

TEST_CASE("the identity map on the symmetric matrices is rejected at the unit") {
    const Ring q = rationals();
    std::vector<Matrix> images;
    images.push_back(unit(q, 2, 0, 0));
    images.push_back(unit(q, 2, 1, 1));
    images.push_back(ebar(q, 2, 0, 1));
    const AdditiveMap id = map_from_basis_images(q, 2, Carrier::JordanSymmetric, images);
    const Verdict v = check_local_inner_jordan(id, PointSet::explicit_points({identity(q, 2)}));
    REQUIRE(v.outcome == Verdict::Outcome::Reject);
    CHECK(*v.witness == identity(q, 2));

    // sampled mode includes the identity among its shapes
    const Verdict vs = check_local_inner_jordan(id, PointSet::sampled(50, 1));
    CHECK(vs.outcome == Verdict::Outcome::Reject);
}

TEST_CASE("incompatible pointwise skew witnesses are caught on the sum") {
    const Ring q = rationals();
    std::vector<Matrix> impls;
    impls.push_back(zeros(q, 2, 2));                      // e00 -> 0
    impls.push_back(zeros(q, 2, 2));                      // e11 -> 0
    impls.push_back(unit(q, 2, 0, 1) - unit(q, 2, 1, 0)); // ebar01 -> nonzero
    const AdditiveMap f = gen_jordan_basis_patched(q, 2, impls);
    CHECK(apply_map(f, unit(q, 2, 0, 0)).is_zero());
    CHECK(!apply_map(f, ebar(q, 2, 0, 1)).is_zero());

    std::vector<Matrix> pts{unit(q, 2, 0, 0), unit(q, 2, 1, 1), ebar(q, 2, 0, 1),
                            unit(q, 2, 0, 0) + ebar(q, 2, 0, 1)};
    const Verdict v = check_local_inner_jordan(f, PointSet::explicit_points(pts));
    REQUIRE(v.outcome == Verdict::Outcome::Reject);
    CHECK(*v.witness == unit(q, 2, 0, 0) + ebar(q, 2, 0, 1));
}

TEST_CASE("globalize_jordan recovers the skew implementer exactly") {
    const Ring f3 = gf(3);
    const Matrix c = unit(f3, 2, 0, 1) - unit(f3, 2, 1, 0);
    const JordanGlobalizeOutcome g = globalize_jordan(jordan_map_from_skew(c));
    REQUIRE(g.ok());
    CHECK(g.implementer->matrix() == c);

    const JordanGlobalizeOutcome z = globalize_jordan(jordan_map_from_skew(zeros(f3, 2, 2)));
    REQUIRE(z.ok());
    CHECK(z.implementer->matrix().is_zero());

    const Ring z5 = zmod(5);
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix skew = random_skew(z5, 3, rng);
        const JordanGlobalizeOutcome r = globalize_jordan(jordan_map_from_skew(skew));
        REQUIRE(r.ok());
        CHECK(r.implementer->matrix() == skew);
    }

    // non-local maps are refused
    std::vector<Matrix> images;
    images.push_back(unit(f3, 2, 0, 0));
    images.push_back(unit(f3, 2, 1, 1));
    images.push_back(ebar(f3, 2, 0, 1));
    CHECK(!globalize_jordan(map_from_basis_images(f3, 2, Carrier::JordanSymmetric, images)).ok());
}

TEST_CASE("skew recovery scales to larger dimensions and rings") {
    for (const Ring& ring : {gf(7), rationals(), zmod(9), integers()}) {
        Rng rng(41);
        for (std::size_t n : {std::size_t(4), std::size_t(5)}) {
            for (int trial = 0; trial < 5; ++trial) {
                const Matrix c = random_skew(ring, n, rng);
                const JordanGlobalizeOutcome g = globalize_jordan(jordan_map_from_skew(c));
                REQUIRE(g.ok());
                CHECK(g.implementer->matrix() == c);
            }
        }
    }
}

TEST_CASE("jordan_is_derivation distinguishes the Leibniz identity") {
    for (const Ring& ring : {gf(3), gf(5), rationals(), zmod(9)}) {
        Rng rng(19);
        for (int trial = 0; trial < 10; ++trial) {
            CHECK(jordan_is_derivation(jordan_map_from_skew(random_skew(ring, 2, rng))));
            CHECK(jordan_is_derivation(jordan_map_from_skew(random_skew(ring, 3, rng))));
        }
        CHECK(jordan_is_derivation(jordan_map_from_skew(zeros(ring, 2, 2))));
        std::vector<Matrix> images;
        images.push_back(unit(ring, 2, 0, 0));
        images.push_back(unit(ring, 2, 1, 1));
        images.push_back(ebar(ring, 2, 0, 1));
        CHECK(!jordan_is_derivation(map_from_basis_images(ring, 2, Carrier::JordanSymmetric, images)));
    }
}

TEST_CASE("doubled-product rings run the same checker and globalizer") {
    for (const Ring& ring : {integers(), zmod(4), gf(2)}) {
        CHECK(jordan_variant(ring) == JordanVariant::Doubled);
        Rng rng(23);
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix c = random_skew(ring, 3, rng);
            const AdditiveMap f = jordan_map_from_skew(c);
            const JordanGlobalizeOutcome g = globalize_jordan(f);
            REQUIRE(g.ok());
            CHECK(g.implementer->matrix() == c);
            CHECK(jordan_is_derivation(f));
        }
    }
    CHECK(jordan_variant(gf(3)) == JordanVariant::Half);
    CHECK(jordan_variant(zmod(9)) == JordanVariant::Half);
}

TEST_CASE("symmetric closure and skew action") {
    Rng rng(29);
    for (const Ring& ring : {gf(3), rationals()}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix a = random_symmetric(ring, 3, rng);
            const Matrix b = random_symmetric(ring, 3, rng);
            CHECK(is_symmetric(jordan_product_auto(SymMatrix(a), SymMatrix(b)).matrix()));
            const Matrix c = random_skew(ring, 3, rng);
            CHECK(is_symmetric(inner_apply(c, a)));
        }
    }
    CHECK_THROWS_AS(SymMatrix(unit(gf(3), 2, 0, 1)), ShapeError);
    CHECK_THROWS_AS(SkewImplementer(identity(gf(3), 2)), ShapeError);
}

TEST_CASE("only zero commutes with every symmetric matrix") {
    for (const Ring& ring : {gf(3), rationals(), zmod(4), integers()}) {
        for (std::size_t n = 1; n <= 5; ++n) CHECK(skew_commutant_trivial(ring, n));
    }
    // exhaustive confirmation at the smallest interesting size
    const Ring f3 = gf(3);
    for (const Matrix& c : all_skew(f3, 2)) {
        if (c.is_zero()) continue;
        bool commutes_with_all = true;
        for (const Matrix& x : all_symmetric(f3, 2)) {
            if (!commutator(c, x).is_zero()) {
                commutes_with_all = false;
                break;
            }
        }
        CHECK(!commutes_with_all);
    }
}

TEST_CASE("Jordan scaling homogeneity holds for accepted maps over an extension field") {
    const Ring f9 = gf9();
    const auto lambdas = enumerate_scalars(f9);
    std::size_t accepted = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        AdditiveMap f = seed % 2 == 0 ? jordan_map_from_skew(random_skew(f9, 2, rng)) : [&] {
            std::vector<Matrix> impls;
            for (int i = 0; i < 6; ++i) impls.push_back(random_skew(f9, 2, rng));
            return gen_jordan_basis_patched(f9, 2, impls);
        }();
        const Verdict v = check_local_inner_jordan(f, PointSet::exhaustive());
        if (!v.accepted()) continue;
        ++accepted;
        for (std::size_t b = 0; b < f.module_dim(); ++b) {
            const Matrix e = f.module_basis_element(b);
            for (const Scalar& lam : lambdas) {
                CHECK(apply_map(f, mat_scale(lam, e)) == mat_scale(lam, apply_map(f, e)));
            }
        }
    }
    CHECK(accepted >= 4);
}

TEST_CASE("machine-word and generic Jordan sweeps agree") {
    const Ring f3 = gf(3);
    const auto pts = all_symmetric(f3, 2);
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        Rng rng(seed);
        std::vector<Matrix> impls;
        for (int i = 0; i < 3; ++i) impls.push_back(random_skew(f3, 2, rng));
        const AdditiveMap f = gen_jordan_basis_patched(f3, 2, impls);
        const Verdict fast = check_local_inner_jordan(f, PointSet::exhaustive());
        const Verdict generic = check_local_inner_jordan(f, PointSet::explicit_points(pts));
        CHECK(fast.accepted() == generic.accepted());
        if (!fast.accepted()) {
            CHECK(*fast.witness == *generic.witness);
            CHECK(fast.checked_points == generic.checked_points);
        }
    }
}

TEST_CASE("the Jordan checker verdict matches brute force over skew implementers") {
    const Ring f3 = gf(3);
    const auto points = all_symmetric(f3, 2);
    const auto skews = all_skew(f3, 2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        std::vector<Matrix> impls;
        for (int i = 0; i < 3; ++i) impls.push_back(random_skew(f3, 2, rng));
        const AdditiveMap f = gen_jordan_basis_patched(f3, 2, impls);
        bool brute = true;
        for (const Matrix& x : points) {
            const Matrix y = apply_map(f, x);
            bool witnessed = false;
            for (const Matrix& c : skews) {
                if (inner_apply(c, x) == y) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed) {
                brute = false;
                break;
            }
        }
        const Verdict v = check_local_inner_jordan(f, PointSet::exhaustive());
        CHECK(v.accepted() == brute);
    }
}
