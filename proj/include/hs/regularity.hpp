// Indeterminacy data at infinity and the Henon-Sibony regularity report.
//
// C^k sits inside P^k with the hyperplane at infinity {w = 0}. The extension
// of a degree-d map is [F_1^h : ... : F_k^h : w^d], so on the hyperplane at
// infinity only the degree-d homogeneous parts survive: the indeterminacy
// set I^+ is the common projective zero locus of the top parts of the
// components that attain degree d. Components of lower degree vanish there
// identically and impose no condition.
//
// Disjointness of I^+ and I^-: the combined form system has only the
// trivial common zero in C^k iff some graded piece of the generated ideal
// is full; it suffices to scan degrees up to the Macaulay bound
// sum(deg_i) - #forms + 1. Each graded piece is a plain rank computation
// over the Gaussian rationals.

#pragma once

#include <string>
#include <vector>

#include "hs/poly_map.hpp"

namespace hs {

class NotRegularError : public std::runtime_error {
public:
    explicit NotRegularError(const std::string& what) : std::runtime_error(what) {}
};

struct HomogeneousSystem {
    int nvars = 0;
    int map_degree = 0;               // degree of the map the forms came from
    std::vector<Polynomial> forms;    // homogeneous of degree map_degree

    std::string to_string(std::span<const std::string> names) const;
};

// top-degree forms of F, viewed in the k direction variables at infinity;
// throws NotRegularError for maps of degree < 2
HomogeneousSystem indeterminacy_forms(const PolyMap& F);

// true iff the union of both systems has only the trivial common zero
bool projective_disjointness(const HomogeneousSystem& A, const HomogeneousSystem& B);

struct RegularityReport {
    int k = 0;
    int d = 0;       // degree of F
    int delta = 0;   // degree of the inverse
    int s = 0;       // 0 when no integer solution exists
    bool degree_identity_holds = false;
    bool indeterminacy_disjoint = false;
    HomogeneousSystem iplus;
    HomogeneousSystem iminus;

    bool is_regular() const { return degree_identity_holds && indeterminacy_disjoint; }
    // predicted dimensions per the degree identity, not independently verified
    int predicted_dim_iplus() const { return k - s - 1; }
    int predicted_dim_iminus() const { return s - 1; }

    std::string to_text(std::span<const std::string> names) const;
};

// requires a verified inverse; throws NotRegularError when the inverse does
// not verify or either degree is < 2
RegularityReport regularity_report(const PolyMap& F, const PolyMap& Finv, const Budget& budget = {});

}  // namespace hs
