#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace superschur {

// Exact rational scalar. Everything in this project runs over Q; no floating
// point is used anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" with integer p and positive integer q (no whitespace,
// no floats, no exponents). Returns nullopt on anything else.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string to_string(const Rat& x);

}  // namespace superschur
