#include "hs/builtin_suite.hpp"

#include "hs/regularity.hpp"

namespace hs {

namespace builtin {

const char* example_c3_source() {
    return "map F(x, y, z) = (y + x^2, z + y^2, x) "
           "inverse = (z, x - z^2, y - (x - z^2)^2)\n";
}

const char* henon_source() {
    return "map H(x, y) = (y, y^2 + 1 - x) inverse = (x^2 + 1 - y, x)\n";
}

const char* product_c4_source() {
    return "map F4(x, y, z, w) = (y, y^2 + 1 - x, w, w^2 + 1 - z) "
           "inverse = (x^2 + 1 - y, x, z^2 + 1 - w, z)\n"
           "map G4(x, y, z, w) = (y, y^2 + 1 - x, z^2 + 1 - w, z) "
           "inverse = (x^2 + 1 - y, x, w, w^2 + 1 - z)\n";
}

MapDefinition example_c3() { return parse_map_file(example_c3_source()).at(0); }
MapDefinition henon() { return parse_map_file(henon_source()).at(0); }
MapDefinition product_c4_f() { return parse_map_file(product_c4_source()).at(0); }
MapDefinition product_c4_g() { return parse_map_file(product_c4_source()).at(1); }

}  // namespace builtin

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace {

bool trace_contains(const SolutionFamily& fam, const std::string& needle) {
    for (const auto& line : fam.trace)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

ParamAffine make_affine(int k, const std::vector<std::string>& params,
                        const std::vector<std::vector<std::string>>& lin,
                        const std::vector<std::string>& tr) {
    ParamAffine a;
    a.k = k;
    a.nparams = static_cast<int>(params.size());
    a.param_names = params;
    a.lin.assign(static_cast<std::size_t>(k),
                 std::vector<Polynomial>(static_cast<std::size_t>(k), Polynomial(a.nparams)));
    a.tr.assign(static_cast<std::size_t>(k), Polynomial(a.nparams));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            a.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                parse_polynomial(lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], params);
        a.tr[static_cast<std::size_t>(i)] = parse_polynomial(tr[static_cast<std::size_t>(i)], params);
    }
    return a;
}

}  // namespace

std::vector<CheckResult> run_builtin_suite(const Budget& budget) {
    std::vector<CheckResult> out;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back(CheckResult{name, pass, detail});
    };

    MapDefinition fdef = builtin::example_c3();
    PolyMap F = fdef.to_polymap();
    const PolyMap& Finv = F.claimed_inverse();
    std::vector<std::string> xyz = fdef.variables;

    // 1. the displayed inverse really is the inverse, both ways
    check("inverse_identity", verify_inverse(F, Finv, budget));

    // 2. regularity data: d = 2, delta = 4, s = 2, indeterminacy sets disjoint
    {
        RegularityReport rep = regularity_report(F, Finv, budget);
        bool ok = rep.k == 3 && rep.d == 2 && rep.delta == 4 && rep.s == 2 &&
                  rep.degree_identity_holds && rep.indeterminacy_disjoint;
        check("regularity_report", ok, rep.to_text(xyz));
    }

    // 3. third coordinate of the first conjugate in the masked ansatz
    {
        auto mask = mask_from_forms(indeterminacy_forms(F), indeterminacy_forms(Finv));
        bool ok = mask.has_value();
        std::string detail;
        if (ok) {
            ParamAffine ansatz = generic_affine(3, &*mask);
            ok = ansatz.param_names ==
                 std::vector<std::string>{"a", "b", "c", "d", "e", "x0", "y0", "z0"};
            auto conj = conjugate(F, Finv, ansatz, budget);
            std::vector<std::string> names = xyz;
            names.insert(names.end(), ansatz.param_names.begin(), ansatz.param_names.end());
            Polynomial expected = parse_polynomial("a*z + b*(x - z^2) + x0", names);
            ok = ok && conj.at(2) == expected;
            detail = conj.at(2).to_string(names);
        }
        check("conjugate_third_coordinate", ok, detail);
    }

    // 4. after eliminating b, c, d, e the second coordinate carries -4*a^3*x0*x*z
    {
        std::vector<std::string> params{"a", "x0", "y0", "z0"};
        ParamAffine beta = make_affine(3, params,
                                       {{"a", "0", "0"}, {"-2*a*x0", "a^2", "0"}, {"0", "0", "a^4"}},
                                       {"x0", "y0", "z0"});
        auto conj = conjugate(F, Finv, beta, budget);
        std::vector<std::string> names = xyz;
        names.insert(names.end(), params.begin(), params.end());
        bool ok = conj.at(0) == parse_polynomial("a^2*x + y0 + x0^2", names);
        ok = ok && conj.at(1) == parse_polynomial(
                       "a^4*y - 4*a^3*x0*x*z + 4*a^3*x0*z^3 + 4*a^2*x0^2*z^2 + 2*a^2*y0*x"
                       " - 2*a^2*y0*z^2 - 4*a*x0*y0*z + y0^2 + z0",
                       names);
        ok = ok && conj.at(2) == parse_polynomial("a*z + x0", names);
        check("conjugate_after_elimination", ok,
              conj.at(1).to_string(names));
    }

    // 5. the symmetry family: diag(a, a^2, a^4) with a^7 = 1, seven elements
    NOptions nopts;
    nopts.max_rounds = 5;
    nopts.budget = budget;
    NResult nres = compute_N(F, Finv, nopts);
    {
        bool ok = nres.stabilized && nres.family.status() == SolutionFamily::Status::solved;
        ok = ok && nres.family.element_count() == 7ull;
        ok = ok && nres.family.power_residuals.size() == 1 &&
             nres.family.power_residuals[0].order == 7 &&
             nres.family.power_residuals[0].value.is_one();
        // reduced map is diag(a, a^2, a^4) with zero translation
        const auto& red = nres.reduced;
        std::vector<std::string> pn = nres.ansatz.param_names;
        ok = ok && red.lin[0][0] == parse_polynomial("a", pn) &&
             red.lin[1][1] == parse_polynomial("a^2", pn) &&
             red.lin[2][2] == parse_polynomial("a^4", pn);
        for (int i = 0; i < 3 && ok; ++i) {
            ok = red.tr[static_cast<std::size_t>(i)].is_zero();
            for (int j = 0; j < 3 && ok; ++j)
                if (i != j) ok = red.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero();
        }
        ok = ok && trace_contains(nres.family, "b = 0") &&
             trace_contains(nres.family, "c = -2*a*x0") && trace_contains(nres.family, "d = a^2") &&
             trace_contains(nres.family, "e = a^4") && trace_contains(nres.family, "x0 = 0") &&
             trace_contains(nres.family, "z0 = 0") && trace_contains(nres.family, "a^7 = 1");
        check("symmetry_family", ok, nres.family.to_text());
    }

    // 6. conjugation rotates the family: F o diag(a,a^2,a^4) o F^-1 = diag(a^2,a^4,a)
    {
        ParamAffine member = ParamAffine::diagonal_cyclo({1, 2, 4}, 7);
        auto conj = conjugate(F, Finv, member, budget);
        ConstraintSet cs = affinity_constraints(conj, 3, 1);
        bool affine = true;
        for (const auto& eq : cs.equations) affine = affine && eq.is_zero();
        ParamAffine rotated = affine_part(conj, member);
        check("conjugation_rotates_family",
              affine && rotated.same_map(ParamAffine::diagonal_cyclo({2, 4, 1}, 7)));
    }

    // 7. non-commutation: beta o F o beta^-1 = (a^-2 (x^2+y), a^3 (z+y^2), a^-1 x) != F,
    //    with the displayed powers realized by the member diag(a^2, a^4, a);
    //    over a^7 = 1 the inverse powers are a^-2 = a^5 and a^-1 = a^6
    {
        ParamAffine beta = ParamAffine::diagonal_cyclo({2, 4, 1}, 7);
        auto conj = conjugate_map_by_affine(beta, F, budget);
        std::vector<std::string> names = xyz;
        names.push_back("a");
        bool ok = conj.at(0) == parse_polynomial("a^5*(x^2 + y)", names) &&
                  conj.at(1) == parse_polynomial("a^3*(z + y^2)", names) &&
                  conj.at(2) == parse_polynomial("a^6*x", names);
        // every member with a != 1 fails to commute; a = 1 commutes
        for (int j = 0; j <= 6 && ok; ++j) {
            auto cj = conjugate_map_by_affine(specialize_member(beta, j), F, budget);
            bool equal = true;
            for (int i = 0; i < 3; ++i)
                equal = equal && cj.at(static_cast<std::size_t>(i)) ==
                                     lift_main(F.component(i), 1);
            ok = ok && (j == 0 ? equal : !equal);
        }
        check("non_commutation", ok);
    }

    // 8-9. product pair over the Henon map: commutes, shares no iterate
    {
        PolyMap F4 = builtin::product_c4_f().to_polymap();
        PolyMap G4 = builtin::product_c4_g().to_polymap();
        check("product_inverses", verify_inverse(F4, F4.claimed_inverse(), budget) &&
                                      verify_inverse(G4, G4.claimed_inverse(), budget));
        check("product_commutes", compose(F4, G4, budget) == compose(G4, F4, budget));
        auto none = shared_iterate_search(F4, G4, 3, budget);
        auto self = shared_iterate_search(F4, F4, 3, budget);
        check("product_no_shared_iterate",
              !none.has_value() && self.has_value() && self->n == 1 && self->m == 1);
        RegularityReport rf = regularity_report(F4, F4.claimed_inverse(), budget);
        RegularityReport rg = regularity_report(G4, G4.claimed_inverse(), budget);
        check("product_regularity", rf.s == 2 && rf.indeterminacy_disjoint && rg.s == 2 &&
                                        rg.indeterminacy_disjoint);
    }

    // 10. degree growth of the iterates: 2^n forward, 4^n backward
    {
        bool ok = true;
        for (int n = 0; n <= 3; ++n) {
            ok = ok && iterate(F, n, budget).degree() == (n == 0 ? 1 : 1 << n);
            int dn = iterate(Finv, n, budget).degree();
            ok = ok && dn == (n == 0 ? 1 : 1 << (2 * n));
        }
        check("degree_growth", ok);
    }

    // 11. group closure on the seven enumerated members
    {
        auto members = enumerate_members(nres);
        bool ok = members.size() == 7;
        for (const auto& m : members)
            ok = ok && verify_membership(F, Finv, m, 3, budget);
        for (const auto& m1 : members)
            for (const auto& m2 : members)
                ok = ok && verify_membership(F, Finv, affine_compose(m1, m2), 3, budget);
        for (const auto& m : members)
            ok = ok && verify_membership(F, Finv, affine_inverse(m), 3, budget);
        check("group_closure", ok);
    }

    return out;
}

}  // namespace hs
