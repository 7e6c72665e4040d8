#include <doctest.h>

#include "derivlab/serialize.hpp"

using namespace derivlab;

namespace {

Ring gf(long long p) { return Ring(RingSpec::prime_field(Int(p))); }
Ring gf4() { return Ring(RingSpec::extension_field(2, 2)); }

} // namespace

TEST_CASE("ring specs round trip through JSON") {
    const std::vector<RingSpec> specs = {RingSpec::prime_field(5), RingSpec::integers_mod(4),
                                         RingSpec::rationals(), RingSpec::integers(),
                                         RingSpec::extension_field(2, 2, {Int(1), Int(1), Int(1)})};
    for (const RingSpec& s : specs) {
        CHECK(ring_spec_from_json(to_json(s)) == s);
    }
    CHECK(ring_spec_from_json(R"({"kind":"prime-field","p":5})") == RingSpec::prime_field(5));
    CHECK(ring_spec_from_json(R"({"kind":"integers-mod","m":4})") == RingSpec::integers_mod(4));
    CHECK(ring_spec_from_json(R"({"kind":"extension-field","p":2,"k":2,"modulus":[1,1,1]})") ==
          RingSpec::extension_field(2, 2, {Int(1), Int(1), Int(1)}));
    CHECK_THROWS_AS(ring_spec_from_json("{"), ParseError);
    CHECK_THROWS_AS(ring_spec_from_json(R"({"kind":"octonions"})"), ParseError);
}

TEST_CASE("compact ring spellings parse") {
    CHECK(ring_spec_from_string("gf(7)") == RingSpec::prime_field(7));
    CHECK(ring_spec_from_string("GF(2^2)").kind == RingKind::ExtensionField);
    CHECK(ring_spec_from_string("q") == RingSpec::rationals());
    CHECK(ring_spec_from_string("rationals") == RingSpec::rationals());
    CHECK(ring_spec_from_string("Z") == RingSpec::integers());
    CHECK(ring_spec_from_string("z/6") == RingSpec::integers_mod(6));
    CHECK(ring_spec_from_string("mod(9)") == RingSpec::integers_mod(9));
    CHECK(ring_spec_from_string(R"({"kind":"rationals"})") == RingSpec::rationals());
    CHECK_THROWS_AS(ring_spec_from_string("gf(abc)"), ParseError);
    CHECK_THROWS_AS(ring_spec_from_string("so(3)"), ParseError);
}

TEST_CASE("matrices round trip, including coefficient-list entries") {
    for (const Ring& ring : {gf(5), Ring(RingSpec::rationals()), Ring(RingSpec::integers()), gf4()}) {
        Rng rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix m = random_matrix(ring, 3, 3, rng);
            CHECK(matrix_from_json(ring, to_json(m)) == m);
        }
    }
    const Ring f2 = gf(2);
    const Matrix e01 = matrix_from_json(f2, R"({"n":2,"rows":[["0","1"],["0","0"]]})");
    CHECK(e01 == unit(f2, 2, 0, 1));

    CHECK_THROWS_AS(matrix_from_json(f2, R"({"n":2,"rows":[["0","1"]]})"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(f2, R"({"n":2,"rows":[["0","1","0"],["0","0","0"]]})"),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(f2, R"({"rows":[]})"), ParseError);
}

TEST_CASE("map files round trip on both carriers") {
    const Ring f3 = gf(3);
    Rng rng(9);
    const AdditiveMap full = map_from_inner(random_matrix(f3, 2, 2, rng));
    const AdditiveMap full_again = map_from_json(to_json(full));
    CHECK(full_again == full);

    const AdditiveMap jordan = jordan_map_from_skew(random_skew(f3, 3, rng));
    const AdditiveMap jordan_again = map_from_json(to_json(jordan));
    CHECK(jordan_again == jordan);
    CHECK(jordan_again.carrier() == Carrier::JordanSymmetric);

    const AdditiveMap ext = map_from_inner(random_matrix(gf4(), 2, 2, rng));
    CHECK(map_from_json(to_json(ext)) == ext);

    CHECK_THROWS_AS(map_from_json(R"({"ring":{"kind":"rationals"},"n":2})"), ParseError);
    CHECK_THROWS_AS(map_from_json(R"({"ring":{"kind":"rationals"},"n":2,"carrier":"full",
                                      "basis_images":[]})"),
                    ShapeError);
    // wrong value types surface as parse errors, not library internals
    CHECK_THROWS_AS(map_from_json(R"({"ring":{"kind":"rationals"},"n":"two","carrier":"full",
                                      "basis_images":[]})"),
                    ParseError);
    CHECK_THROWS_AS(ring_spec_from_json(R"({"kind":42})"), ParseError);
}

TEST_CASE("jordan map files over an extension field round trip") {
    const Ring f9(RingSpec::extension_field(3, 2));
    Rng rng(11);
    const AdditiveMap j = jordan_map_from_skew(random_skew(f9, 2, rng));
    const AdditiveMap back = map_from_json(to_json(j));
    CHECK(back == j);
    CHECK(back.carrier() == Carrier::JordanSymmetric);
    CHECK(back.ext_degree() == 2);
}

TEST_CASE("arbitrary-precision entries survive serialization") {
    const Ring z(RingSpec::integers());
    Matrix m(z, 2, 2);
    m.set(0, 0, z.from_int(Int("123456789012345678901234567890")));
    m.set(1, 1, z.from_int(Int("-98765432109876543210")));
    CHECK(matrix_from_json(z, to_json(m)) == m);
}

TEST_CASE("verdict and report serializations carry the contract fields") {
    const Ring q = Ring(RingSpec::rationals());
    Verdict v;
    v.outcome = Verdict::Outcome::Reject;
    v.witness = unit(q, 2, 0, 1) + unit(q, 2, 1, 0);
    v.checked_points = 5;
    v.seed = 7;
    const std::string text = to_json(v);
    CHECK(text.find("\"reject\"") != std::string::npos);
    CHECK(text.find("\"witness\"") != std::string::npos);
    CHECK(text.find("\"checked_points\": 5") != std::string::npos);

    Rng rng(5);
    const AdditiveMap f = map_from_inner(random_matrix(gf(2), 2, 2, rng));
    const ReconstructReport rep = reconstruct_and_verify(f, PointSet::exhaustive());
    const std::string rtext = to_json(rep);
    CHECK(rtext.find("\"success\"") != std::string::npos);
    CHECK(rtext.find("\"paths_agree\": true") != std::string::npos);
    CHECK(rtext.find("\"implementer\"") != std::string::npos);
}

TEST_CASE("report_without_timings strips every timing field") {
    const std::string report = R"({
        "elapsed_seconds": 1.5,
        "nested": {"timing_ms": 3.2, "kept": 1},
        "list": [{"timings_ms": {"a": 1}}, {"kept": 2}]
    })";
    const std::string stripped = report_without_timings(report);
    CHECK(stripped.find("elapsed_seconds") == std::string::npos);
    CHECK(stripped.find("timing_ms") == std::string::npos);
    CHECK(stripped.find("timings_ms") == std::string::npos);
    CHECK(stripped.find("kept") != std::string::npos);
}

TEST_CASE("scalar strings round trip through matrix serialization") {
    const Ring q = Ring(RingSpec::rationals());
    Matrix m(q, 2, 2);
    m.set(0, 0, scalar_from_string(q, "-2/7"));
    m.set(1, 1, scalar_from_string(q, "22/7"));
    const Matrix back = matrix_from_json(q, to_json(m));
    CHECK(back == m);
    CHECK(to_json(m).find("-2/7") != std::string::npos);
}
