#include <doctest.h>

#include "hs/bigint.hpp"
#include "hs/rational.hpp"
#include "hs/rng.hpp"

using namespace hs;

TEST_CASE("bigint construction and decimal round trip") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-1).to_string() == "-1");
    CHECK(BigInt(1234567890123456789ll).to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
          "-987654321098765432109876543210");
    CHECK(BigInt::from_string("0000123").to_string() == "123");
    CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
}

TEST_CASE("bigint arithmetic agrees with 64-bit reference on small values") {
    SplitMix64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_string() == std::to_string(a + b));
        CHECK((A - B).to_string() == std::to_string(a - b));
        CHECK((A * B).to_string() == std::to_string(a * b));
        if (b != 0) {
            CHECK((A / B).to_string() == std::to_string(a / b));
            CHECK((A % B).to_string() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint multi-limb division") {
    BigInt a = BigInt(10).pow(40) + BigInt(12345);
    BigInt b = BigInt(10).pow(20) - BigInt(3);
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r >= BigInt(0));
    CHECK(r < b);
    // reconstruction identity on random sizes
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt x = BigInt(static_cast<long long>(rng.next() >> 1)).pow(3);
        BigInt y = BigInt(static_cast<long long>((rng.next() >> 40) + 1));
        BigInt::divmod(x, y, q, r);
        CHECK(q * y + r == x);
        CHECK(r.abs() < y.abs());
    }
}

TEST_CASE("bigint division: divisor patterns that stress quotient correction") {
    auto roundtrip = [](const char* as, const char* bs, const char* qs, const char* rs) {
        BigInt a = BigInt::from_string(as), b = BigInt::from_string(bs);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q.to_string() == qs);
        CHECK(r.to_string() == rs);
        CHECK(q * b + r == a);
    };
    roundtrip("340282366920938463463374607431768211455", "4294967297",
              "79228162495817593524129366015", "0");
    roundtrip("1461501637330902918203684832697836275582222991360", "18446744073709551615",
              "79228162514264337597838917631", "4294967295");
    roundtrip("340282366841710300949110269838224261120", "18446744069414584321",
              "18446744073709551614", "18446744065119617026");
    roundtrip("6277101735386680763835789423207666416102355444464034512895",
              "79228162514264337593543950337", "79228162514264337593543950335", "0");
    roundtrip("340282366920938463463374607431768211455", "18446744073709551617",
              "18446744073709551615", "0");
}

TEST_CASE("bigint gcd, pow, shifts") {
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt(2).pow(100).to_string() == "1267650600228229401496703205376");
    CHECK(BigInt(7).shifted_left(10) == BigInt(7168));
    CHECK(BigInt(7168).shifted_right(10) == BigInt(7));
    CHECK(BigInt(2).pow(100).bit_length() == 101);
}

TEST_CASE("rational normalization invariants") {
    BigRational r(6, -4);
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(2));
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK_THROWS_AS(BigRational(1, 0), std::domain_error);

    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        long long n = static_cast<long long>(rng.next() % 2001) - 1000;
        long long d = static_cast<long long>(rng.next() % 2000) - 1000;
        if (d == 0) d = 1;
        BigRational x(n, d);
        CHECK(x.den() > BigInt(0));
        CHECK(BigInt::gcd(x.num(), x.den()).is_one());
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(BigRational(1, 2) + BigRational(1, 3) == BigRational(5, 6));
    CHECK(BigRational(1, 2) * BigRational(2, 3) == BigRational(1, 3));
    CHECK(BigRational(7, 3) / BigRational(7, 3) == BigRational(1));
    CHECK(BigRational(1, 3).to_string() == "1/3");
    CHECK(BigRational(-4, 2).to_string() == "-2");
    CHECK(BigRational(1, 3).compare(BigRational(1, 2)) < 0);
    CHECK(BigRational(355, 113).to_double() == doctest::Approx(355.0 / 113.0).epsilon(1e-15));
}

TEST_CASE("gaussian rational field operations") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(BigRational(1, 2), BigRational(-3, 4));
    CHECK(z * z.inverse() == GaussianRational(1));
    CHECK((z / z) == GaussianRational(1));
    CHECK(z + (-z) == GaussianRational());
    CHECK(z.conj().im() == BigRational(3, 4));

    SplitMix64 rng(13);
    for (int t = 0; t < 300; ++t) {
        GaussianRational w(BigRational(static_cast<long long>(rng.next() % 41) - 20,
                                       1 + static_cast<long long>(rng.next() % 9)),
                           BigRational(static_cast<long long>(rng.next() % 41) - 20,
                                       1 + static_cast<long long>(rng.next() % 9)));
        if (w.is_zero()) continue;
        CHECK(w * w.inverse() == GaussianRational(1));
    }
}

TEST_CASE("gaussian rational printing") {
    CHECK(GaussianRational(BigRational(1, 2)).to_string() == "1/2");
    CHECK(GaussianRational(BigRational(0), BigRational(3, 4)).to_string() == "3/4*i");
    CHECK(GaussianRational(BigRational(1, 2), BigRational(3, 4)).to_string() == "1/2+3/4*i");
    CHECK(GaussianRational(BigRational(0), BigRational(-1)).to_string() == "-i");
    CHECK(GaussianRational(BigRational(1), BigRational(-2)).to_string() == "1-2*i");
    CHECK(GaussianRational(BigRational(5)).to_string() == "5");
}
