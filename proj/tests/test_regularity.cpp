#include <doctest.h>

#include "hs/builtin_suite.hpp"
#include "hs/regularity.hpp"

using namespace hs;

namespace {
const std::vector<std::string> kXYZ{"x", "y", "z"};
Polynomial P3(const std::string& s) { return parse_polynomial(s, kXYZ); }
HomogeneousSystem sys(int nvars, int deg, std::vector<Polynomial> forms) {
    return HomogeneousSystem{nvars, deg, std::move(forms)};
}
}  // namespace

TEST_CASE("indeterminacy forms of the C^3 example") {
    PolyMap F = builtin::example_c3().to_polymap();
    HomogeneousSystem ip = indeterminacy_forms(F);
    CHECK(ip.map_degree == 2);
    REQUIRE(ip.forms.size() == 2);  // third component has degree 1 < 2: no condition
    CHECK(ip.forms[0] == P3("x^2"));
    CHECK(ip.forms[1] == P3("y^2"));

    HomogeneousSystem im = indeterminacy_forms(F.claimed_inverse());
    CHECK(im.map_degree == 4);
    REQUIRE(im.forms.size() == 1);  // only the last component attains degree 4
    CHECK(im.forms[0] == P3("-z^4"));
}

TEST_CASE("degree-1 maps are rejected") {
    CHECK_THROWS_WITH_AS(indeterminacy_forms(PolyMap::identity(3)),
                         doctest::Contains("not Henon-Sibony"), NotRegularError);
}

TEST_CASE("projective disjointness decisions") {
    // the C^3 example: {x^2, y^2} against {-z^4} meet only at the origin
    CHECK(projective_disjointness(sys(3, 2, {P3("x^2"), P3("y^2")}), sys(3, 4, {P3("-z^4")})));

    // {x} and {x^2} share the whole plane x = 0
    std::vector<std::string> xy{"x", "y"};
    CHECK_FALSE(projective_disjointness(
        sys(2, 1, {parse_polynomial("x", xy)}), sys(2, 2, {parse_polynomial("x^2", xy)})));

    // all coordinates together leave only the trivial zero
    CHECK(projective_disjointness(sys(3, 1, {P3("x"), P3("y")}), sys(3, 1, {P3("z")})));

    // a non-coordinate pair in the plane: {x^2 - y^2} and {x*y} cut only 0
    CHECK(projective_disjointness(sys(2, 2, {parse_polynomial("x^2 - y^2", xy)}),
                                  sys(2, 2, {parse_polynomial("x*y", xy)})));
}

TEST_CASE("regularity report of the C^3 example") {
    PolyMap F = builtin::example_c3().to_polymap();
    RegularityReport rep = regularity_report(F, F.claimed_inverse());
    CHECK(rep.k == 3);
    CHECK(rep.d == 2);
    CHECK(rep.delta == 4);
    CHECK(rep.s == 2);  // 2^2 = 4^1
    CHECK(rep.degree_identity_holds);
    CHECK(rep.indeterminacy_disjoint);
    CHECK(rep.is_regular());
    CHECK(rep.predicted_dim_iplus() == 0);
    CHECK(rep.predicted_dim_iminus() == 1);
    std::string text = rep.to_text(kXYZ);
    CHECK(text.find("d = 2") != std::string::npos);
    CHECK(text.find("delta = 4") != std::string::npos);
    CHECK(text.find("s = 2") != std::string::npos);
}

TEST_CASE("regularity report of the Henon map") {
    PolyMap h = builtin::henon().to_polymap();
    RegularityReport rep = regularity_report(h, h.claimed_inverse());
    CHECK(rep.k == 2);
    CHECK(rep.d == 2);
    CHECK(rep.delta == 2);
    CHECK(rep.s == 1);
    CHECK(rep.is_regular());
}

TEST_CASE("identity map cannot be regular") {
    PolyMap id = PolyMap::identity(2);
    CHECK_THROWS_AS(regularity_report(id, id), NotRegularError);
}

TEST_CASE("unverifiable inverse is rejected") {
    PolyMap F = builtin::example_c3().to_polymap();
    CHECK_THROWS_WITH_AS(regularity_report(F, F), doctest::Contains("does not verify"),
                         NotRegularError);
}

TEST_CASE("running the report on the inverse swaps the data") {
    PolyMap F = builtin::example_c3().to_polymap();
    PolyMap Finv(F.claimed_inverse().components());
    RegularityReport fwd = regularity_report(F, F.claimed_inverse());
    RegularityReport bwd = regularity_report(Finv, PolyMap(F.components()));
    CHECK(bwd.d == fwd.delta);
    CHECK(bwd.delta == fwd.d);
    CHECK(bwd.s == fwd.k - fwd.s);
    CHECK(bwd.indeterminacy_disjoint == fwd.indeterminacy_disjoint);
}

TEST_CASE("product maps on C^4 are regular with s = 2") {
    PolyMap F4 = builtin::product_c4_f().to_polymap();
    RegularityReport rep = regularity_report(F4, F4.claimed_inverse());
    CHECK(rep.k == 4);
    CHECK(rep.d == 2);
    CHECK(rep.delta == 2);
    CHECK(rep.s == 2);
    CHECK(rep.is_regular());
}
