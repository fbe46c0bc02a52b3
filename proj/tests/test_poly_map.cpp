#include <doctest.h>

#include "hs/builtin_suite.hpp"
#include "hs/poly_map.hpp"
#include "support/random_poly.hpp"

using namespace hs;
using hs::testing::random_poly;

namespace {
PolyMap example_c3() { return builtin::example_c3().to_polymap(); }
}  // namespace

TEST_CASE("composition with claimed inverse gives the identity both ways") {
    PolyMap F = example_c3();
    const PolyMap& Finv = F.claimed_inverse();
    PolyMap id = PolyMap::identity(3);
    CHECK(compose(F, Finv) == id);
    CHECK(compose(Finv, F) == id);
    CHECK(verify_inverse(F, Finv));
}

TEST_CASE("composition basics") {
    PolyMap F = example_c3();
    CHECK(compose(F, PolyMap::identity(3)) == F);
    CHECK(compose(PolyMap::identity(3), F) == F);
    CHECK(compose(F, F).degree() == 4);
    CHECK_THROWS_AS(compose(F, PolyMap::identity(2)), std::invalid_argument);
}

TEST_CASE("iteration") {
    PolyMap F = example_c3();
    CHECK(iterate(F, 0) == PolyMap::identity(3));
    CHECK(iterate(F, 2) == compose(F, F));
    for (int n = 0; n <= 4; ++n) CHECK(iterate(PolyMap(F.components()), n).degree() == (n == 0 ? 1 : 1 << n));
    for (int n = 1; n <= 3; ++n)
        CHECK(iterate(PolyMap(F.claimed_inverse().components()), n).degree() == 1 << (2 * n));
    CHECK_THROWS_AS(iterate(F, -1), std::invalid_argument);
}

TEST_CASE("verify_inverse rejects non-inverses") {
    PolyMap F = example_c3();
    CHECK_FALSE(verify_inverse(F, F));
    CHECK(verify_inverse(PolyMap::identity(3), PolyMap::identity(3)));
}

TEST_CASE("composition is associative") {
    SplitMix64 rng(2024);
    for (int t = 0; t < 12; ++t) {
        int k = 1 + static_cast<int>(rng.next() % 2);
        auto mk = [&] {
            std::vector<Polynomial> comps;
            for (int i = 0; i < k; ++i) comps.push_back(random_poly(rng, k, 2, 3));
            return PolyMap(std::move(comps));
        };
        PolyMap A = mk(), B = mk(), C = mk();
        Budget roomy{512, 2000000};
        CHECK(compose(compose(A, B, roomy), C, roomy) == compose(A, compose(B, C, roomy), roomy));
    }
}

TEST_CASE("iterates of an inverse pair cancel step by step") {
    // left-cancellation keeps every intermediate small: Finv o F^n = F^(n-1)
    PolyMap F = example_c3();
    const PolyMap& Finv = F.claimed_inverse();
    for (int n = 1; n <= 3; ++n) {
        PolyMap a = iterate(PolyMap(F.components()), n);
        for (int j = 0; j < n; ++j) a = compose(Finv, a);
        CHECK(a == PolyMap::identity(3));
        PolyMap b = iterate(PolyMap(Finv.components()), n);
        for (int j = 0; j < n; ++j) b = compose(F, b);
        CHECK(b == PolyMap::identity(3));
    }
}

TEST_CASE("degree budget stops deep iteration") {
    PolyMap F(example_c3().components());  // forward only
    Budget small{8, 1000000};
    CHECK(iterate(F, 3, small).degree() == 8);      // right at the budget
    CHECK_THROWS_AS(iterate(F, 4, small), BudgetError);  // degree 16 > 8
    Budget few_terms{256, 4};
    CHECK_THROWS_AS(iterate(F, 3, few_terms), BudgetError);
}

TEST_CASE("exact and float map evaluation") {
    PolyMap F = example_c3();
    std::vector<GaussianRational> z{GaussianRational(2), GaussianRational(0), GaussianRational(1)};
    auto w = F.eval_exact(z);
    CHECK(w[0] == GaussianRational(4));
    CHECK(w[1] == GaussianRational(1));
    CHECK(w[2] == GaussianRational(2));
    std::vector<std::complex<double>> zf{{2, 0}, {0, 0}, {1, 0}};
    auto wf = F.eval_float(zf);
    CHECK(wf[0].real() == doctest::Approx(4.0));
}
