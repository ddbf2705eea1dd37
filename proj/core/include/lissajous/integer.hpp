#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lissajous {

using Integer = boost::multiprecision::cpp_int;

// Floor division for any sign combination; den must be nonzero.
Integer floor_div(const Integer& num, const Integer& den);

// Largest s with s*s <= n, for n >= 0.
Integer isqrt(const Integer& n);

bool is_square(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

// Floor of x/y and least nonnegative residue for machine integers.
std::int64_t floor_div(std::int64_t x, std::int64_t y);
std::int64_t mod_floor(std::int64_t x, std::int64_t y);

std::optional<std::int64_t> to_int64(const Integer& n);

std::string to_string(const Integer& n);

inline int sign(std::int64_t x) { return (x > 0) - (x < 0); }

}  // namespace lissajous
