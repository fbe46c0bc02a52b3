#include <doctest.h>

#include "hs/map_dsl.hpp"
#include "hs/polynomial.hpp"
#include "support/random_poly.hpp"

using namespace hs;
using hs::testing::random_point;
using hs::testing::random_poly;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};
Polynomial P(const std::string& s) { return parse_polynomial(s, kXYZ); }
}  // namespace

TEST_CASE("addition: cancellation, identity, combinations") {
    CHECK(P("x^2 + y") + P("-x^2") == P("y"));
    Polynomial p = P("3*x*y - z");
    CHECK(p + Polynomial::zero(3) == p);
    CHECK(P("y + x^2") + P("z + y^2") == P("x^2 + y^2 + y + z"));
}

TEST_CASE("multiplication: squares, identity, complex conjugates") {
    CHECK(P("x - z^2") * P("x - z^2") == P("x^2 - 2*x*z^2 + z^4"));
    Polynomial p = P("x^2 - 7*y + 1/3");
    CHECK(p * Polynomial::constant(3, GaussianRational(1)) == p);
    CHECK(P("x + i*y") * P("x - i*y") == P("x^2 + y^2"));
    CHECK(P("x - z^2").degree() + P("x + y").degree() == (P("x - z^2") * P("x + y")).degree());
}

TEST_CASE("variable-count mismatch is rejected") {
    Polynomial two(2), three(3);
    CHECK_THROWS_AS(two + three, std::invalid_argument);
    CHECK_THROWS_AS(two * three, std::invalid_argument);
}

TEST_CASE("substitution basics") {
    // univariate: x^2 with x -> y + x^2 (in a 3-variable ring)
    Polynomial sq = Polynomial::variable(1, 0).pow(2);
    std::vector<Polynomial> maps{P("y + x^2")};
    CHECK(sq.substitute(maps) == P("y + x^2") * P("y + x^2"));

    // identity substitution
    Polynomial p = P("x^2*z - 3*y + 1/2");
    std::vector<Polynomial> id{P("x"), P("y"), P("z")};
    CHECK(p.substitute(id) == p);

    // middle coordinate of the inverse composed back: (x - z^2) at the
    // forward map's components collapses to y
    std::vector<Polynomial> fwd{P("y + x^2"), P("z + y^2"), P("x")};
    CHECK(P("x - z^2").substitute(fwd) == P("y"));
}

TEST_CASE("degree and homogeneous top") {
    CHECK(P("y + x^2").degree() == 2);
    CHECK(Polynomial::constant(3, GaussianRational(5)).degree() == 0);
    CHECK(Polynomial::zero(3).degree() == -1);
    CHECK(P("y + x^2").homogeneous_top() == P("x^2"));
    CHECK(P("x - z^2").homogeneous_top() == P("-z^2"));
    Polynomial homog = P("x^2 + 3*x*y - z^2");
    CHECK(homog.homogeneous_top() == homog);
    CHECK_THROWS_AS(Polynomial::zero(3).homogeneous_top(), std::domain_error);
}

TEST_CASE("exact evaluation") {
    std::vector<GaussianRational> origin(3);
    CHECK(P("y + x^2").eval_exact(origin) == GaussianRational());
    std::vector<GaussianRational> z{GaussianRational(2), GaussianRational(0), GaussianRational(1)};
    CHECK(P("x - z^2").eval_exact(z) == GaussianRational(1));
}

TEST_CASE("float evaluation tracks exact evaluation") {
    SplitMix64 rng(99);
    for (int t = 0; t < 120; ++t) {
        Polynomial p = random_poly(rng, 3, 3, 6);
        // rational points of magnitude up to 1e3
        std::vector<GaussianRational> z;
        std::vector<std::complex<double>> zf;
        for (int i = 0; i < 3; ++i) {
            GaussianRational c(BigRational(static_cast<long long>(rng.next() % 2000001) - 1000000, 1000),
                               BigRational(static_cast<long long>(rng.next() % 2000001) - 1000000, 1000));
            z.push_back(c);
            zf.push_back(c.to_complex());
        }
        std::complex<double> exact = p.eval_exact(z).to_complex();
        std::complex<double> approx = p.eval_float(zf);
        double scale = std::max(1.0, std::abs(exact));
        CHECK(std::abs(exact - approx) <= 1e-12 * scale);
    }
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    SplitMix64 rng(1234);
    for (int t = 0; t < 60; ++t) {
        int k = 1 + static_cast<int>(rng.next() % 3);
        Polynomial a = random_poly(rng, k, 3, 5);
        Polynomial b = random_poly(rng, k, 3, 5);
        Polynomial c = random_poly(rng, k, 3, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    SplitMix64 rng(555);
    for (int t = 0; t < 40; ++t) {
        int k = 1 + static_cast<int>(rng.next() % 3);
        Polynomial p = random_poly(rng, k, 3, 4);
        Polynomial q = random_poly(rng, k, 3, 4);
        std::vector<Polynomial> maps;
        for (int i = 0; i < k; ++i) maps.push_back(random_poly(rng, k, 2, 3));
        CHECK((p * q).substitute(maps) == p.substitute(maps) * q.substitute(maps));
        CHECK((p + q).substitute(maps) == p.substitute(maps) + q.substitute(maps));
    }
}

TEST_CASE("evaluation commutes with substitution") {
    SplitMix64 rng(777);
    int checked = 0;
    while (checked < 120) {
        int k = 1 + static_cast<int>(rng.next() % 3);
        Polynomial p = random_poly(rng, k, 3, 4);
        std::vector<Polynomial> maps;
        for (int i = 0; i < k; ++i) maps.push_back(random_poly(rng, k, 2, 3));
        auto z = random_point(rng, k);
        std::vector<GaussianRational> mz;
        for (const auto& m : maps) mz.push_back(m.eval_exact(z));
        CHECK(p.substitute(maps).eval_exact(z) == p.eval_exact(mz));
        ++checked;
    }
}

TEST_CASE("canonical text form: serialize-parse-serialize is a fixed point") {
    CHECK(P("y + x^2").to_string(kXYZ) == "x^2 + y");
    CHECK(P("y - (x - z^2)^2").to_string(kXYZ) == "-z^4 + 2*x*z^2 - x^2 + y");
    CHECK(Polynomial::zero(3).to_string(kXYZ) == "0");
    CHECK(P("(1/2 + 3/4*i)*x - i*y").to_string(kXYZ) == "(1/2+3/4*i)*x - i*y");

    SplitMix64 rng(31337);
    for (int t = 0; t < 80; ++t) {
        Polynomial p = random_poly(rng, 3, 4, 7);
        std::string s1 = p.to_string(kXYZ);
        Polynomial q = parse_polynomial(s1, kXYZ);
        CHECK(q == p);
        CHECK(q.to_string(kXYZ) == s1);
    }
}

TEST_CASE("budgets stop runaway growth") {
    Budget tiny{8, 1000000};
    Polynomial p = P("x + y^2");
    CHECK_THROWS_AS(p.pow(5, &tiny), BudgetError);
    Budget tiny_terms{256, 3};
    std::vector<Polynomial> maps{P("x + y + z + 1"), P("y"), P("z")};
    CHECK_THROWS_AS(P("x^3 + x^2 + x").substitute(maps, &tiny_terms), BudgetError);
}
