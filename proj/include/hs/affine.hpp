// Affine maps of C^k with entries in a parameter polynomial ring.
//
// Entries are polynomials in `nparams` parameter variables; a concrete
// affine map is the nparams == 0 case. A CycloRule p^n = c turns the
// parameter ring into a quotient: exponents of p reduce via
// p^e -> c^(e/n) * p^(e mod n), which is how roots-of-unity families stay
// symbolic and exact.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hs/polynomial.hpp"
#include "hs/regularity.hpp"

namespace hs {

struct CycloRule {
    int param = 0;
    int order = 0;
    GaussianRational value = GaussianRational(1);  // param^order = value
};

// reduce exponents of rule.param in a parameter-ring polynomial
Polynomial cyclo_reduce(const Polynomial& p, const CycloRule& rule);

struct ParamAffine {
    int k = 0;
    int nparams = 0;
    std::vector<std::string> param_names;
    std::vector<std::vector<Polynomial>> lin;  // k x k, entries in the parameter ring
    std::vector<Polynomial> tr;                // k
    std::optional<CycloRule> cyclo;

    static ParamAffine identity(int k);
    static ParamAffine from_constants(const std::vector<std::vector<GaussianRational>>& m,
                                      const std::vector<GaussianRational>& t);
    static ParamAffine diagonal(const std::vector<GaussianRational>& d);
    // diagonal map with entries a^e over the ring Q(i)[a]/(a^order - 1)
    static ParamAffine diagonal_cyclo(const std::vector<int>& exponents, int order,
                                      const std::string& name = "a");

    bool is_concrete() const { return nparams == 0; }
    Polynomial det() const;  // cofactor expansion in the parameter ring

    ParamAffine reduced(const CycloRule& rule) const;
    std::string to_string() const;
    bool same_map(const ParamAffine& o) const;
    // entries are the constants of the identity map (any parameter arity)
    bool is_identity_map() const;

    std::vector<std::complex<double>> apply_float(std::span<const std::complex<double>> z) const;
};

// composition a after b; both must share one parameter space
ParamAffine affine_compose(const ParamAffine& a, const ParamAffine& b);

// inverse of a concrete map (field arithmetic), or of a monomial-entried
// generalized permutation under a cyclotomic rule (exponent negation)
ParamAffine affine_inverse(const ParamAffine& a);

// structural zeros of the linear part forced by fixing both indeterminacy
// sets, available when every form is a power of a single coordinate
struct AffineMask {
    std::vector<std::vector<bool>> zero;  // k x k
};
std::optional<AffineMask> mask_from_forms(const HomogeneousSystem& iplus,
                                          const HomogeneousSystem& iminus);

// fresh parameters for every unmasked entry: letters (skipping 'i') for the
// linear part in row-major order, then x0/y0/z0 (t1..tk beyond k = 3) for
// the translation
ParamAffine generic_affine(int k, const AffineMask* mask = nullptr);

}  // namespace hs
