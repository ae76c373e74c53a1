#include <catch2/catch_amalgamated.hpp>

#include <mhcq/scalar.hpp>

using namespace mhcq;

namespace {

// Independent reduction oracle: plain Euclid on machine ints.
long long gcd_oracle(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Scalar sc(long long re_n, long long re_d, long long im_n = 0, long long im_d = 1) {
    return Scalar(Rational(re_n, re_d), Rational(im_n, im_d));
}

}  // namespace

TEST_CASE("parse_scalar reads the literal grammar") {
    CHECK(parse_scalar("2") == sc(2, 1));
    CHECK(parse_scalar("1/2+3/4i") == sc(1, 2, 3, 4));
    CHECK(parse_scalar("-3") == sc(-3, 1));
    CHECK(parse_scalar("0+1i") == sc(0, 1, 1, 1));
    CHECK(parse_scalar("1-2i") == sc(1, 1, -2, 1));
    CHECK(parse_scalar("-1/3-2/7i") == sc(-1, 3, -2, 7));
}

TEST_CASE("parse_scalar canonicalizes via gcd reduction") {
    // Oracle: 4/6 reduces by gcd(4,6)=2 to 2/3.
    long long g = gcd_oracle(4, 6);
    REQUIRE(g == 2);
    Scalar x = parse_scalar("4/6");
    CHECK(numerator(x.re) == 4 / g);
    CHECK(denominator(x.re) == 6 / g);
    CHECK(x == sc(2, 3));
    CHECK(parse_scalar("-10/4") == sc(-5, 2));
}

TEST_CASE("parse_scalar rejects malformed input") {
    CHECK_THROWS_AS(parse_scalar(""), ScalarError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("1+2"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("1+2j"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("1 + 2i"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("i"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("1/2/3"), ScalarError);
    CHECK_THROWS_AS(parse_scalar("2i"), ScalarError);
}

TEST_CASE("rendering round-trips through the grammar") {
    for (const char* lit : {"0", "2", "-3", "2/3", "-5/2", "1/2+3/4i", "1-2i", "0+1i", "-1/3-2/7i"}) {
        Scalar x = parse_scalar(lit);
        CHECK(to_string(x) == lit);
        CHECK(parse_scalar(to_string(x)) == x);
    }
}

TEST_CASE("field operations are exact") {
    // (1+1i)(1-1i) = 2
    CHECK(sc(1, 1, 1, 1) * sc(1, 1, -1, 1) == sc(2, 1));
    // 1/2 + 1/3 = 5/6
    CHECK(sc(1, 2) + sc(1, 3) == sc(5, 6));
    // x / x = 1 for a handful of nonzero x
    for (auto& x : {sc(3, 7, 2, 5), sc(-1, 1), sc(0, 1, 4, 9)}) {
        CHECK(x / x == Scalar(1));
    }
    CHECK_THROWS_AS(sc(1, 1) / Scalar(0), ScalarError);
}

TEST_CASE("field axioms hold on sampled triples") {
    std::vector<Scalar> sample = {sc(0, 1),  sc(1, 1),      sc(-2, 3),      sc(5, 7, 1, 2),
                                  sc(0, 1, -3, 4), sc(2, 1, 2, 1), sc(-1, 6, 7, 5)};
    for (auto& a : sample)
        for (auto& b : sample)
            for (auto& c : sample) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
    for (auto& a : sample) {
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("conjugation is an involutive field automorphism") {
    CHECK(conj(sc(1, 1, 2, 1)) == sc(1, 1, -2, 1));
    std::vector<Scalar> sample = {sc(0, 1), sc(1, 2, 3, 4), sc(-2, 5, -1, 3), sc(7, 1)};
    for (auto& x : sample) {
        CHECK(conj(conj(x)) == x);
        CHECK((conj(x) == x) == x.is_real());
        for (auto& y : sample) {
            CHECK(conj(x * y) == conj(x) * conj(y));
            CHECK(conj(x + y) == conj(x) + conj(y));
        }
    }
}

TEST_CASE("arbitrary precision integers do not overflow") {
    Scalar big = parse_scalar("123456789012345678901234567890");
    CHECK(big * big == Scalar(Rational(Integer("1524157875323883675049535156253619878750"
                                               "1905199875019052100"))));
    // 2^200 via pow
    Scalar two(2);
    Scalar p = two.pow(200);
    CHECK(p.re == Rational(Integer(1) << 200));
    CHECK(two.pow(-3) == sc(1, 8));
}
