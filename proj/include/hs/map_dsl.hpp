// Text format for map definitions:
//
//   # comment
//   map F(x,y,z) = (y + x^2, z + y^2, x) inverse = (z, x - z^2, y - (x - z^2)^2)
//
// Expressions use +, -, *, ^ with non-negative integer exponents,
// parentheses, integer and rational literals a/b, and the imaginary unit i.
// Precedence: ^ over unary minus over * over +/-, so -x^2 means -(x^2).
// There is no implicit multiplication: 2x is a syntax error.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hs/poly_map.hpp"
#include "hs/polynomial.hpp"

namespace hs {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct MapDefinition {
    std::string name;
    std::vector<std::string> variables;
    std::vector<Polynomial> components;
    std::optional<std::vector<Polynomial>> inverse_components;

    PolyMap to_polymap() const;  // claimed inverse attached when present
};

// one or more `map` declarations
std::vector<MapDefinition> parse_map_file(std::string_view text);

// single expression over the given variables, same grammar as map components
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// canonical rendering; parse(print(d)) == d
std::string print_map(const MapDefinition& def);

// convenience: find by name or throw std::out_of_range
const MapDefinition& find_map(const std::vector<MapDefinition>& defs, const std::string& name);

}  // namespace hs
