#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lissajous/algebra.hpp"
#include "lissajous/lissajous.hpp"
#include "lissajous/words.hpp"

namespace lissajous {

// Label (N, q/p) of a Lissajous class.
struct LevelSlope {
  std::int64_t level = 1;
  std::int64_t p = 1;
  std::int64_t q = 0;

  Slope slope() const { return {p, q}; }
  std::string slope_string() const;  // "q/p"
  bool valid() const;                // gcd(p,q) = 1 and gcd(p+q,6) = 1

  friend bool operator==(const LevelSlope&, const LevelSlope&) = default;
};

// Parses "q/p" into a slope; throws ParseError.
Slope parse_slope(std::string_view text);

struct ClusterSeq {
  std::vector<std::int64_t> radii;
  FriezeLetter first_letter = FriezeLetter::d;  // d when m > 0, b when m < 0
  FriezeWord letters;
};

LevelSlope level_slope_of(const LissajousType& t);
LissajousType type_of(const LevelSlope& ls);
ClusterSeq clusters_of(const LevelSlope& ls);
bool class_equal(const LissajousType& t1, const LissajousType& t2);
std::vector<LissajousType> enumerate_p0(std::int64_t max_m);
std::vector<LevelSlope> enumerate_labels(std::int64_t max_level, std::int64_t max_sum);

// Radii of the clusters: varphi_N of the palindromic conjugate of cw_{q/p}.
std::vector<std::int64_t> cluster_radii(const LevelSlope& ls);

}  // namespace lissajous
