#pragma once

#include <stdexcept>
#include <string>

#include "superschur/superalgebra.hpp"

namespace superschur {

struct ParseError : std::runtime_error {
    using runtime_error::runtime_error;
};

// Strict schema:
//   {"name": string, "even_basis": [string], "odd_basis": [string],
//    "brackets": [{"left": string, "right": string,
//                  "value": [{"basis": string, "coeff": string}]}]}
// Coefficients are exact rational strings "p" or "p/q" (q > 0); floating
// point is rejected. Unknown keys, unknown or duplicate basis names,
// duplicate bracket pairs, pairs stored in the wrong order, and even
// diagonal brackets are all rejected. Throws ParseError.
LieSuperalgebra algebra_from_json(const std::string& text);
LieSuperalgebra load_algebra_file(const std::string& path);

// Canonical serialization: fixed key order, bracket pairs ascending by index
// pair, value terms ascending by basis index, two-space indent. Parsing the
// output reproduces identical structure constants (and identical bytes on
// re-serialization).
std::string algebra_to_json(const LieSuperalgebra& L);
void save_algebra_file(const LieSuperalgebra& L, const std::string& path);

}  // namespace superschur
