#include "lissajous/integer.hpp"

#include <limits>
#include <stdexcept>

namespace lissajous {

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;  // truncates toward zero
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  if (n < 2) return n;
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer s = isqrt(n);
  return s * s == n;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

std::int64_t mod_floor(std::int64_t x, std::int64_t y) {
  std::int64_t r = x % y;
  if (r < 0) r += (y < 0 ? -y : y);
  return r;
}

std::optional<std::int64_t> to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return n.convert_to<std::int64_t>();
}

std::string to_string(const Integer& n) { return n.str(); }

}  // namespace lissajous
