// Built-in ground truth: the degree-2 automorphism of C^3 whose conjugation
// symmetry group is the order-7 family diag(a, a^2, a^4), and the commuting
// product pair over the Henon map h(x,y) = (y, y^2 + 1 - x) that shares no
// iterate. The CLI `verify` subcommand and the test suites run these checks.

#pragma once

#include <string>
#include <vector>

#include "hs/map_dsl.hpp"
#include "hs/symmetry.hpp"

namespace hs {

namespace builtin {

// F(x,y,z) = (y + x^2, z + y^2, x), inverse (z, x - z^2, y - (x - z^2)^2)
const char* example_c3_source();
// h(x,y) = (y, y^2 + 1 - x), inverse (x^2 + 1 - y, x)
const char* henon_source();
// F4 = (h(x,y), h(z,w)) and G4 = (h(x,y), h^{-1}(z,w)) on C^4
const char* product_c4_source();

MapDefinition example_c3();
MapDefinition henon();
MapDefinition product_c4_f();
MapDefinition product_c4_g();

}  // namespace builtin

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// the full symbolic suite; every check is exact
std::vector<CheckResult> run_builtin_suite(const Budget& budget = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace hs
