#include "lissajous/lissajous.hpp"

#include <cstdlib>
#include <numeric>

#include "lissajous/error.hpp"

namespace lissajous {

namespace {

std::int64_t one_mod_three(std::int64_t x) { return mod_floor(x, 3) == 1 ? x : -x; }

void require_odd_ell(const NormalizedType& nt) {
  if (nt.ell % 2 == 0) {
    throw Error(ErrorKind::CollisionType,
                "type " + to_string(nt.type()) + " has even ell = " + std::to_string(nt.ell));
  }
}

void push_a(AbWord& w, int exponent) {
  if (exponent != 0) w.symbols.push_back(AbSymbol::A);
}

void push_b(AbWord& w, int sign) { w.symbols.push_back(sign > 0 ? AbSymbol::B : AbSymbol::BInv); }

// A^{(1 - s e_1)/2} B^{e_1} A^{(e_1 - e_2)/2} ... B^{e_k} A^{(1 - s e_k)/2},
// where the last A exponent uses the same first-sign rule as the opening one.
AbWord braid_word(const std::vector<int>& signs, std::size_t count, int sgn_m, int closing_sign) {
  AbWord w;
  push_a(w, (1 - sgn_m * signs[0]) / 2);
  for (std::size_t k = 0; k < count; ++k) {
    push_b(w, signs[k]);
    if (k + 1 < count) push_a(w, (signs[k] - signs[k + 1]) / 2);
  }
  push_a(w, (1 - sgn_m * closing_sign) / 2);
  return w;
}

}  // namespace

std::string EpsSeq::bit_string() const {
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string to_string(const LissajousType& t) {
  return "(" + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
}

NormalizedType normalize(const LissajousType& t) {
  if (t.m % 3 == 0 || t.n % 3 == 0) {
    throw Error(ErrorKind::DivisibleByThree, "type " + to_string(t) + " has a frequency divisible by 3");
  }
  if (std::gcd(t.m, t.n) != 1) {
    throw Error(ErrorKind::NotCoprime, "type " + to_string(t) + " has gcd(m,n) != 1");
  }
  NormalizedType nt;
  nt.m_star = one_mod_three(t.m);
  nt.n_star = one_mod_three(t.n);
  nt.ell = (nt.m_star - nt.n_star) / 3;
  return nt;
}

bool is_collision_free(const LissajousType& t) {
  if (t.m % 3 == 0 || t.n % 3 == 0) return false;
  return normalize(t).ell % 2 != 0;
}

EpsSeq epsilon_seq(const NormalizedType& nt) {
  require_odd_ell(nt);
  const std::int64_t M = std::abs(nt.m_star);
  const std::int64_t L = std::abs(nt.ell);
  const int s = sign(nt.m_star) * sign(nt.ell);
  EpsSeq e;
  e.sgn_m = sign(nt.m_star);
  e.bits.reserve(2 * M);
  e.signs.reserve(2 * M);
  for (std::int64_t k = 1; k <= 2 * M; ++k) {
    int bit = static_cast<int>(mod_floor(floor_div(2 * L * k - L, 2 * M), 2));
    e.bits.push_back(bit);
    e.signs.push_back(s * (2 * bit - 1));
  }
  return e;
}

AbWord build_W(const NormalizedType& nt) {
  EpsSeq e = epsilon_seq(nt);
  return braid_word(e.signs, e.signs.size(), e.sgn_m, e.signs.back());
}

FriezeWord build_H(const NormalizedType& nt) {
  EpsSeq e = epsilon_seq(nt);
  std::size_t half = e.signs.size() / 2;
  return ab_to_frieze(braid_word(e.signs, half, e.sgn_m, e.signs.front()));
}

P0Reduction reduce_to_p0(const NormalizedType& nt) {
  require_odd_ell(nt);
  std::int64_t m = nt.m_star;
  std::int64_t ell = nt.ell;
  bool swapped = false;
  while (true) {
    const std::int64_t M = std::abs(m);
    const std::int64_t r = mod_floor(sign(m) * ell, 2 * M);
    std::int64_t shifted;
    if (r <= M) {
      // ell' = ell + 2mj keeps (m, .) and swaps the halves when j is odd.
      shifted = sign(m) * r;
      std::int64_t j = (shifted - ell) / (2 * m);
      if (j % 2 != 0) swapped = !swapped;
    } else {
      // ell' = -ell - 2mj is the 2m - n reflection; it swaps when j is even.
      shifted = sign(m) * (2 * M - r);
      std::int64_t j = (-ell - shifted) / (2 * m);
      if (j % 2 == 0) swapped = !swapped;
    }
    const std::int64_t n = m - 3 * shifted;
    if (3 * std::abs(shifted) > 2 * M) return {{m, n}, swapped};
    // Reciprocity: continue from (n, m), whose |first frequency| is smaller.
    ell = -shifted;
    m = n;
    swapped = !swapped;
  }
}

bool is_primitive(const LissajousType& t) {
  if (t.m == 0 || t.n == 0) return false;
  if (std::gcd(t.m, t.n) != 1) return false;
  if (mod_floor(t.m, 3) != 1 || mod_floor(t.n, 3) != 1) return false;
  if (mod_floor(t.m, 6) == mod_floor(t.n, 6)) return false;
  if ((t.m > 0) == (t.n > 0)) return false;
  return std::abs(t.m) < std::abs(t.n) && std::abs(t.n) <= 2 * std::abs(t.m);
}

}  // namespace lissajous
