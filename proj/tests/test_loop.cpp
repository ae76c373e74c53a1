#include <catch2/catch_amalgamated.hpp>

#include <mhcq/loop.hpp>

#include "test_helpers.hpp"

using namespace mhcq;

TEST_CASE("C2 validates with self-inverse generator") {
    Loop g = testutil::c2();
    REQUIRE(g.size() == 2);
    auto e = *g.index_of("e");
    auto x = *g.index_of("g");
    CHECK(g.identity() == e);
    CHECK(g.inverse(x) == x);
    CHECK(g.ldiv(x, e) == x);
}

TEST_CASE("S3 validates and is associative by brute force") {
    Loop g = testutil::s3();
    REQUIRE(g.size() == 6);
    // Independent oracle: exhaustive scan over all 216 triples.
    bool assoc = true;
    for (Loop::Elem a = 0; a < 6; ++a)
        for (Loop::Elem b = 0; b < 6; ++b)
            for (Loop::Elem c = 0; c < 6; ++c)
                assoc = assoc && g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
    CHECK(assoc);
    CHECK(!associativity_witness(g).has_value());
    CHECK(check_ip(g).pass());
}

TEST_CASE("validation errors name the offending data") {
    // 3x3 Latin square whose rows are all non-identity permutations.
    CHECK_THROWS_WITH(validate_loop({"a", "b", "c"}, {{"b", "a", "c"}, {"a", "c", "b"}, {"c", "b", "a"}}),
                      Catch::Matchers::ContainsSubstring("no identity"));
    CHECK_THROWS_WITH(validate_loop({"a", "b"}, {{"a", "a"}, {"b", "b"}}),
                      Catch::Matchers::ContainsSubstring("not a Latin square"));
    CHECK_THROWS_WITH(validate_loop({"a", "b"}, {{"a", "b"}}),
                      Catch::Matchers::ContainsSubstring("rows"));
    CHECK_THROWS_WITH(validate_loop({"a", "b"}, {{"a", "b"}, {"b", "x"}}),
                      Catch::Matchers::ContainsSubstring("not a declared element"));
}

TEST_CASE("division solves the Latin square equations") {
    for (const Loop& g : {testutil::s3(), testutil::moufang12(), testutil::noip5()}) {
        const auto n = static_cast<Loop::Elem>(g.size());
        for (Loop::Elem a = 0; a < n; ++a)
            for (Loop::Elem b = 0; b < n; ++b) {
                CHECK(g.mul(a, g.ldiv(a, b)) == b);
                CHECK(g.mul(g.rdiv(a, b), a) == b);
                CHECK(g.ldiv(a, g.mul(a, b)) == b);
                CHECK(g.rdiv(b, g.mul(a, b)) == a);
            }
    }
}

TEST_CASE("S3 right division of transpositions matches brute force") {
    Loop g = testutil::s3();
    auto s = *g.index_of("s");
    auto sr = *g.index_of("sr");
    // Oracle: scan the column for the unique x with x*s = sr.
    Loop::Elem expect = 0;
    for (Loop::Elem x = 0; x < 6; ++x)
        if (g.mul(x, s) == sr) expect = x;
    CHECK(g.rdiv(s, sr) == expect);
}

TEST_CASE("order-12 Moufang loop: IP holds, associativity fails") {
    Loop g = testutil::moufang12();
    REQUIRE(g.size() == 12);
    CHECK(check_ip(g).pass());
    auto wit = associativity_witness(g);
    REQUIRE(wit.has_value());
    auto [a, b, c] = *wit;
    CHECK(g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)));
    // Moufang law x(y(xz)) = ((xy)x)z holds throughout.
    const auto n = static_cast<Loop::Elem>(g.size());
    for (Loop::Elem x = 0; x < n; ++x)
        for (Loop::Elem y = 0; y < n; ++y)
            for (Loop::Elem z = 0; z < n; ++z)
                REQUIRE(g.mul(x, g.mul(y, g.mul(x, z))) == g.mul(g.mul(g.mul(x, y), x), z));
}

TEST_CASE("frozen order-5 loop has two-sided inverses but fails left IP") {
    Loop g = testutil::noip5();
    IpReport rep = check_ip(g);
    REQUIRE(rep.left_failure.has_value());
    auto [x, y] = *rep.left_failure;
    CHECK(g.mul(g.inverse(x), g.mul(x, y)) != y);
    // inv is still an involution (uniqueness of two-sided inverses).
    for (Loop::Elem a = 0; a < 5; ++a) CHECK(g.inverse(g.inverse(a)) == a);
}

TEST_CASE("IP pass implies antiautomorphic inverses exhaustively") {
    for (const Loop& g : {testutil::s3(), testutil::moufang12()}) {
        REQUIRE(check_ip(g).pass());
        const auto n = static_cast<Loop::Elem>(g.size());
        for (Loop::Elem x = 0; x < n; ++x)
            for (Loop::Elem y = 0; y < n; ++y)
                CHECK(g.inverse(g.mul(x, y)) == g.mul(g.inverse(y), g.inverse(x)));
    }
}
