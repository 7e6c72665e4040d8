#include <doctest.h>

#include "derivlab/matrices.hpp"

using namespace derivlab;

namespace {

Ring gf(long long p) { return Ring(RingSpec::prime_field(Int(p))); }
Ring zmod(long long m) { return Ring(RingSpec::integers_mod(Int(m))); }
Ring rationals() { return Ring(RingSpec::rationals()); }
Ring integers() { return Ring(RingSpec::integers()); }

Matrix from_ints(const Ring& ring, std::size_t rows, std::size_t cols,
                 std::initializer_list<long long> vals) {
    std::vector<Scalar> e;
    for (long long v : vals) e.push_back(ring.from_int(v));
    return Matrix(ring, rows, cols, std::move(e));
}

// all vectors of length n over a finite ring, in enumeration order
std::vector<std::vector<Scalar>> all_vectors(const Ring& ring, std::size_t n) {
    const auto scalars = enumerate_scalars(ring);
    std::vector<std::vector<Scalar>> out;
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        std::vector<Scalar> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(scalars[digits[i]]);
        out.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == scalars.size()) digits[pos++] = 0;
        if (pos == n) break;
    }
    return out;
}

bool solves(const Matrix& A, const std::vector<Scalar>& x, const std::vector<Scalar>& b) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Scalar acc = A.ring().zero();
        for (std::size_t j = 0; j < A.cols(); ++j) acc = acc + A.at(i, j) * x[j];
        if (!(acc == b[i])) return false;
    }
    return true;
}

// cofactor-expansion determinant, the independent oracle for unimodularity
Int det_oracle(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0).as_int();
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).as_int() == 0) continue;
        Matrix minor(m.ring(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        }
        const Int term = m.at(0, j).as_int() * det_oracle(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

TEST_CASE("matrix units multiply by the unit rule") {
    const Ring f2 = gf(2);
    CHECK(unit(f2, 2, 0, 1) == from_ints(f2, 2, 2, {0, 1, 0, 0}));

    Rng rng(3);
    for (const Ring& ring : {gf(3), rationals(), zmod(6)}) {
        const std::size_t n = 3;
        for (int trial = 0; trial < 30; ++trial) {
            const std::size_t i = rng.bounded(n), j = rng.bounded(n);
            const std::size_t k = rng.bounded(n), l = rng.bounded(n);
            const Matrix prod = unit(ring, n, i, j) * unit(ring, n, k, l);
            if (j == k) {
                CHECK(prod == unit(ring, n, i, l));
            } else {
                CHECK(prod.is_zero());
            }
        }
    }
    CHECK_THROWS_AS(unit(gf(2), 2, 2, 0), ShapeError);
}

TEST_CASE("basic matrix operations") {
    const Ring q = rationals();
    CHECK(unit(q, 2, 0, 1) * unit(q, 2, 1, 0) == unit(q, 2, 0, 0));
    CHECK(transpose(unit(q, 2, 0, 1)) == unit(q, 2, 1, 0));
    const Scalar half = *scalar_inv(q.from_int(2));
    const Matrix ebar = unit(q, 2, 0, 1) + unit(q, 2, 1, 0);
    CHECK(mat_scale(half, ebar) + mat_scale(half, ebar) == ebar);
    CHECK(mat_scale(q.from_int(2), mat_scale(half, ebar)) == ebar);
    CHECK_THROWS_AS(unit(q, 2, 0, 0) * unit(q, 3, 0, 0), ShapeError);
    CHECK_THROWS_AS(unit(q, 2, 0, 0) + unit(gf(3), 2, 0, 0), RingMismatchError);
}

TEST_CASE("commutator identities") {
    const Ring q = rationals();
    CHECK(commutator(unit(q, 2, 0, 1), unit(q, 2, 1, 0)) ==
          unit(q, 2, 0, 0) - unit(q, 2, 1, 1));

    // [e00, ebar01] = e01 - e10, expanded through the multiplication oracle
    const Matrix e00 = unit(q, 2, 0, 0);
    const Matrix ebar = unit(q, 2, 0, 1) + unit(q, 2, 1, 0);
    CHECK(e00 * ebar - ebar * e00 == unit(q, 2, 0, 1) - unit(q, 2, 1, 0));

    for (const Ring& ring : {gf(2), gf(5), zmod(4), integers(), rationals()}) {
        Rng rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const Matrix a = random_matrix(ring, 3, 3, rng);
            const Matrix b = random_matrix(ring, 3, 3, rng);
            CHECK(commutator(a, b) == -commutator(b, a));
            CHECK(commutator(a, a).is_zero());
        }
    }
}

TEST_CASE("corner isolates one entry and decomposes the matrix") {
    const Ring q = rationals();
    const Matrix a = from_ints(q, 2, 2, {1, 2, 3, 4});
    CHECK(corner(a, 0, 1) == from_ints(q, 2, 2, {0, 2, 0, 0}));
    // corner(a, i, j) = e_ii * a * e_jj
    CHECK(corner(a, 1, 0) == unit(q, 2, 1, 1) * a * unit(q, 2, 0, 0));

    Rng rng(5);
    for (const Ring& ring : {gf(3), zmod(6)}) {
        const Matrix m = random_matrix(ring, 3, 3, rng);
        Matrix sum = zeros(ring, 3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                sum = sum + corner(m, i, j);
                CHECK(corner(corner(m, i, j), i, j) == corner(m, i, j));
            }
        }
        CHECK(sum == m);
    }
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    const Matrix c = corner(unit(q, 2, k, l), i, j);
                    if (i == k && j == l) {
                        CHECK(c == unit(q, 2, k, l));
                    } else {
                        CHECK(c.is_zero());
                    }
                }
            }
        }
    }
}

TEST_CASE("symmetry and skewness predicates") {
    const Ring q = rationals();
    CHECK(is_symmetric(unit(q, 2, 0, 1) + unit(q, 2, 1, 0)));
    CHECK(is_skew(unit(q, 2, 0, 1) - unit(q, 2, 1, 0)));
    CHECK(!is_symmetric(unit(q, 2, 0, 1)));
    CHECK(!is_skew(unit(q, 2, 0, 1)));
    // zero diagonal is part of skewness in every characteristic
    const Ring f2 = gf(2);
    CHECK(!is_skew(identity(f2, 2)));
    CHECK(is_skew(unit(f2, 2, 0, 1) + unit(f2, 2, 1, 0)));
}

TEST_CASE("field solve matches exhaustive enumeration") {
    const Ring f3 = gf(3);
    const Matrix A = from_ints(f3, 2, 2, {1, 1, 0, 0});
    const std::vector<Scalar> b{f3.from_int(2), f3.from_int(0)};
    const SolutionSpace sol = solve_linear(A, b);
    REQUIRE(sol.solvable());
    CHECK(*sol.particular == std::vector<Scalar>{f3.from_int(2), f3.from_int(0)});
    CHECK(sol.homogeneous.size() == 1);
    for (const auto& v : all_vectors(f3, 2)) {
        CHECK(solves(A, v, b) == sol.contains(v));
    }

    Rng rng(17);
    for (const Ring& ring : {gf(2), gf(3), gf(5)}) {
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t m = 1 + rng.bounded(4), n = 1 + rng.bounded(4);
            const Matrix M = random_matrix(ring, m, n, rng);
            std::vector<Scalar> rhs;
            for (std::size_t i = 0; i < m; ++i) rhs.push_back(ring.random_scalar(rng));
            const SolutionSpace s = solve_linear(M, rhs);
            bool any = false;
            for (const auto& v : all_vectors(ring, n)) {
                const bool ok = solves(M, v, rhs);
                any = any || ok;
                CHECK(ok == s.contains(v));
            }
            CHECK(any == s.solvable());
        }
    }
}

TEST_CASE("integer solve decides solvability via the normal form") {
    const Ring z = integers();
    // 2x = 3 has no integer solution
    CHECK(!solve_linear(from_ints(z, 1, 1, {2}), {z.from_int(3)}).solvable());

    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.bounded(3), n = 1 + rng.bounded(3);
        const Matrix A = random_matrix(z, m, n, rng);
        // planted solution: always solvable, must contain the plant
        std::vector<Scalar> x0;
        for (std::size_t j = 0; j < n; ++j) x0.push_back(z.random_scalar(rng));
        std::vector<Scalar> b;
        for (std::size_t i = 0; i < m; ++i) {
            Scalar acc = z.zero();
            for (std::size_t j = 0; j < n; ++j) acc = acc + A.at(i, j) * x0[j];
            b.push_back(acc);
        }
        const SolutionSpace s = solve_linear(A, b);
        REQUIRE(s.solvable());
        CHECK(solves(A, *s.particular, b));
        CHECK(s.contains(x0));
        for (const auto& h : s.homogeneous) {
            std::vector<Scalar> zero(m, z.zero());
            CHECK(solves(A, h, zero));
        }

        // random right-hand side: integer solvability implies rational
        std::vector<Scalar> rb;
        for (std::size_t i = 0; i < m; ++i) rb.push_back(z.random_scalar(rng));
        const SolutionSpace rs = solve_linear(A, rb);
        const Ring q = rationals();
        Matrix Aq(q, m, n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) Aq.set(i, j, q.from_int(A.at(i, j).as_int()));
        }
        std::vector<Scalar> bq;
        for (const Scalar& s2 : rb) bq.push_back(q.from_int(s2.as_int()));
        const bool rational_solvable = solve_linear(Aq, bq).solvable();
        if (rs.solvable()) {
            CHECK(rational_solvable);
            CHECK(solves(A, *rs.particular, rb));
        }
        if (!rational_solvable) CHECK(!rs.solvable());
    }
}

TEST_CASE("modular solve matches exhaustive enumeration") {
    const Ring z4 = zmod(4);
    const SolutionSpace s = solve_linear(from_ints(z4, 1, 1, {2}), {z4.from_int(2)});
    REQUIRE(s.solvable());
    CHECK(s.contains({z4.from_int(1)}));
    CHECK(s.contains({z4.from_int(3)}));
    CHECK(!s.contains({z4.from_int(0)}));
    CHECK(!s.contains({z4.from_int(2)}));

    Rng rng(31);
    for (const Ring& ring : {zmod(4), zmod(6)}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 1 + rng.bounded(2), n = 1 + rng.bounded(3);
            const Matrix A = random_matrix(ring, m, n, rng);
            std::vector<Scalar> b;
            for (std::size_t i = 0; i < m; ++i) b.push_back(ring.random_scalar(rng));
            const SolutionSpace sol = solve_linear(A, b);
            bool any = false;
            for (const auto& v : all_vectors(ring, n)) {
                const bool ok = solves(A, v, b);
                any = any || ok;
                CHECK(ok == sol.contains(v));
            }
            CHECK(any == sol.solvable());
        }
    }
}

TEST_CASE("smith normal form produces a unimodular diagonalization") {
    const Ring z = integers();
    const SmithDecomposition d = smith_normal_form(from_ints(z, 2, 2, {2, 0, 0, 3}));
    CHECK(d.s == from_ints(z, 2, 2, {1, 0, 0, 6}));
    CHECK(d.u * d.s * d.v == from_ints(z, 2, 2, {2, 0, 0, 3}));

    CHECK(smith_normal_form(identity(z, 3)).s == identity(z, 3));
    const SmithDecomposition zdec = smith_normal_form(zeros(z, 2, 3));
    CHECK(zdec.s == zeros(z, 2, 3));
    CHECK(zdec.u == identity(z, 2));
    CHECK(zdec.v == identity(z, 3));

    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.bounded(4), n = 1 + rng.bounded(4);
        const Matrix A = random_matrix(z, m, n, rng);
        const SmithDecomposition snf = smith_normal_form(A);
        CHECK(snf.u * snf.s * snf.v == A);
        const Int du = det_oracle(snf.u);
        const Int dv = det_oracle(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        const std::size_t steps = std::min(m, n);
        for (std::size_t i = 0; i < steps; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) CHECK(snf.s.at(i, j).is_zero());
            }
            CHECK(snf.s.at(i, i).as_int() >= 0);
            if (i + 1 < steps && snf.s.at(i, i).as_int() != 0) {
                CHECK(snf.s.at(i + 1, i + 1).as_int() % snf.s.at(i, i).as_int() == 0);
            }
            if (snf.s.at(i, i).as_int() == 0 && i + 1 < steps) {
                CHECK(snf.s.at(i + 1, i + 1).as_int() == 0);
            }
        }
    }
}
