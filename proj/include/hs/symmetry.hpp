// The conjugation symmetry group
//
//   N = { beta affine : F^n o beta o F^-n is affine for every n }
//
// computed by iterated constraint refinement. Conjugates are formed in a
// combined ring of k main variables followed by the ansatz parameters, so
// "the coefficient of a degree->=2 monomial" is a parameter polynomial that
// must vanish. One round is
//
//   conjugate -> affinity constraints (+ structural mask) -> solve
//
// feeding the affine part of the conjugate back in. Refinement stops when a
// round adds no facts and the conjugate revisits an earlier shape of the
// family (for the order-7 example the conjugates cycle with period 3), or
// when max_rounds is hit.

#pragma once

#include <optional>

#include "hs/affine.hpp"
#include "hs/poly_map.hpp"
#include "hs/solver.hpp"

namespace hs {

// components of F o beta o F^-1 in k main + nparams variables
std::vector<Polynomial> conjugate(const PolyMap& F, const PolyMap& Finv, const ParamAffine& beta,
                                  const Budget& budget = {});

// beta o F o beta^-1 for a concrete or cyclotomic affine map
std::vector<Polynomial> conjugate_map_by_affine(const ParamAffine& beta, const PolyMap& F,
                                                const Budget& budget = {});

// lift a k-variable polynomial into the combined main+parameter ring
Polynomial lift_main(const Polynomial& p, int nparams);

// one equation per (component, monomial of main-degree >= 2)
ConstraintSet affinity_constraints(const std::vector<Polynomial>& conj, int k, int nparams);

// the degree <= 1 part of a conjugate, as an affine map over the parameters;
// terms of main-degree >= 2 are ignored (they are someone else's equations)
ParamAffine affine_part(const std::vector<Polynomial>& conj, const ParamAffine& like);

struct NOptions {
    int max_rounds = 8;
    bool use_mask = true;
    Budget budget;
    // refinement stops (reported, not guessed) once some carried conjugate
    // entry has more terms than this: unresolved constraints compound across
    // rounds and blow the entries up, while solvable families stay tiny
    // (monomial entries for diagonal families, a few terms for translations)
    std::size_t carry_term_cap = 64;
};

struct NResult {
    ParamAffine ansatz;
    SolutionFamily family;
    ParamAffine reduced;  // ansatz under the family's assignments
    bool stabilized = false;
    int rounds_used = 0;
};

// requires a verified inverse pair
NResult compute_N(const PolyMap& F, const PolyMap& Finv, const NOptions& opts = {});

// true iff F^j o beta o F^-j is affine for all 1 <= j <= rounds, by
// successive conjugation (F^j is never formed)
bool verify_membership(const PolyMap& F, const PolyMap& Finv, const ParamAffine& beta, int rounds,
                       const Budget& budget = {});

// concrete members of a finite family: all parameters assigned, or one free
// parameter with a root-of-unity residual (members stay symbolic over the
// cyclotomic quotient ring, so later checks are exact)
std::vector<ParamAffine> enumerate_members(const NResult& r);

// substitute the family parameter a -> a^j (exponent remap mod the order)
ParamAffine specialize_member(const ParamAffine& member, int j);

struct SharedIterate {
    int n = 0;
    int m = 0;
};

// lexicographically first (n, m) with degree(F)^n == degree(G)^m and
// F^n == G^m exactly, or nothing
std::optional<SharedIterate> shared_iterate_search(const PolyMap& F, const PolyMap& G, int n_max,
                                                   const Budget& budget = {});

}  // namespace hs
