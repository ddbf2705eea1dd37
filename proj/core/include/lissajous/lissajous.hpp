#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lissajous/algebra.hpp"

namespace lissajous {

// Frequencies of the curve sin(2*pi*m*t) + i*B*sin(2*pi*n*t).
struct LissajousType {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const LissajousType&, const LissajousType&) = default;
  friend auto operator<=>(const LissajousType&, const LissajousType&) = default;
};

// Signs flipped so that m* = n* = 1 (mod 3); ell = (m* - n*) / 3.
struct NormalizedType {
  std::int64_t m_star = 0;
  std::int64_t n_star = 0;
  std::int64_t ell = 0;

  LissajousType type() const { return {m_star, n_star}; }
  friend bool operator==(const NormalizedType&, const NormalizedType&) = default;
};

struct EpsSeq {
  std::vector<int> bits;   // eps'_k in {0,1}, k = 1..2|m|
  std::vector<int> signs;  // eps_k in {-1,+1}
  int sgn_m = 1;

  std::string bit_string() const;
};

struct P0Reduction {
  LissajousType type;
  // True when H of the result equals H_{n,m} of the input rather than H_{m,n}.
  bool swapped = false;
};

NormalizedType normalize(const LissajousType& t);
bool is_collision_free(const LissajousType& t);
EpsSeq epsilon_seq(const NormalizedType& nt);
AbWord build_W(const NormalizedType& nt);
FriezeWord build_H(const NormalizedType& nt);
P0Reduction reduce_to_p0(const NormalizedType& nt);
bool is_primitive(const LissajousType& t);

std::string to_string(const LissajousType& t);

}  // namespace lissajous
