// Constraint elimination over the parameter ring.
//
// The solver applies a deliberately small set of exact rules to a fixed
// point, in priority order:
//
//   (i)   equations linear in one parameter with a nonzero *constant*
//         coefficient are solved for it and substituted everywhere;
//   (ii)  pure powers c*p^e = 0 assign p = 0 (the field has no nilpotents);
//   (iii) known-unit factors are cancelled out of equations; a parameter is
//         a unit when a disequality (or a power residual) reduces to a
//         monomial containing it;
//   (iv)  two-term univariate equations alpha*p^n + beta = 0 with n >= 2
//         are kept symbolic as power residuals p^n = c, and from then on
//         exponents of p reduce via p^e -> c^(e/n) * p^(e mod n).
//
// Anything else stays in the residual verbatim and marks the family
// unsolved. No guessing, no case splits.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hs/affine.hpp"
#include "hs/polynomial.hpp"

namespace hs {

struct ConstraintSet {
    std::vector<Polynomial> equations;      // required to vanish
    std::vector<Polynomial> disequalities;  // required nonzero
};

struct PowerResidual {
    int param = 0;
    int order = 0;
    GaussianRational value;  // param^order = value, value != 0

    Polynomial as_polynomial(int nparams) const;
};

struct SolutionFamily {
    enum class Status { solved, unsolved };

    int nparams = 0;
    std::vector<std::string> param_names;

    std::map<int, Polynomial> assignments;    // param -> poly in free params
    std::vector<PowerResidual> power_residuals;
    std::vector<Polynomial> other_residuals;  // outside the rule classes
    std::vector<Polynomial> disequalities;
    std::set<int> units;
    bool inconsistent = false;
    std::vector<std::string> trace;

    static SolutionFamily empty_for(const ParamAffine& ansatz);

    Status status() const {
        return other_residuals.empty() && !inconsistent ? Status::solved : Status::unsolved;
    }
    bool is_assigned(int p) const { return assignments.count(p) > 0; }

    // substitute assignments, then reduce exponents by the power residuals
    Polynomial reduce(const Polynomial& p) const;
    ParamAffine reduce(const ParamAffine& a) const;

    // finite when every free parameter carries exactly one power residual:
    // the product of their orders; 1 when everything is assigned
    std::optional<unsigned long long> element_count() const;

    std::string to_text() const;
};

// Applies the rules above until nothing fires. Solving an empty set returns
// the family unchanged; an unsolvable equation is never guessed around, it
// lands in other_residuals.
SolutionFamily solve_constraints(const ConstraintSet& c, SolutionFamily family);

}  // namespace hs
