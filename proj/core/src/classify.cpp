#include "lissajous/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "lissajous/error.hpp"

namespace lissajous {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

void require_label(const LevelSlope& ls) {
  if (!ls.valid()) {
    throw Error(ErrorKind::InvalidLabel,
                "label (" + std::to_string(ls.level) + ", " + ls.slope_string() + ") is not admissible");
  }
}

std::int64_t with_residue_one(std::int64_t magnitude) {
  return mod_floor(magnitude, 3) == 1 ? magnitude : -magnitude;
}

FriezeLetter partner(FriezeLetter x) {
  switch (x) {
    case FriezeLetter::b: return FriezeLetter::q;
    case FriezeLetter::q: return FriezeLetter::b;
    case FriezeLetter::d: return FriezeLetter::p;
    case FriezeLetter::p: return FriezeLetter::d;
  }
  return x;
}

// Cluster partner inside a block (db)^{r-1}d or (pq)^{r-1}p.
FriezeLetter sibling(FriezeLetter x) {
  switch (x) {
    case FriezeLetter::d: return FriezeLetter::b;
    case FriezeLetter::b: return FriezeLetter::d;
    case FriezeLetter::p: return FriezeLetter::q;
    case FriezeLetter::q: return FriezeLetter::p;
  }
  return x;
}

}  // namespace

std::string LevelSlope::slope_string() const { return std::to_string(q) + "/" + std::to_string(p); }

bool LevelSlope::valid() const {
  return level >= 1 && p >= 1 && q >= 0 && std::gcd(p, q) == 1 && std::gcd(p + q, std::int64_t{6}) == 1;
}

Slope parse_slope(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorKind::ParseError, "slope must look like q/p");
  Slope s;
  s.q = parse_int(text.substr(0, slash));
  s.p = parse_int(text.substr(slash + 1));
  return s;
}

LevelSlope level_slope_of(const LissajousType& t) {
  if (!is_primitive(t)) throw Error(ErrorKind::NotPrimitive, "type " + to_string(t) + " is not in P0");
  const std::int64_t M = std::abs(t.m);
  const std::int64_t L = std::abs((t.m - t.n) / 3);
  const std::int64_t N = floor_div(2 * L - M, 3 * L - 2 * M);

  // (2N+1)/(3N+1) < L/M <= (2N-1)/(3N-2)
  if (!((2 * N + 1) * M < (3 * N + 1) * L && L * (3 * N - 2) <= (2 * N - 1) * M)) {
    throw std::logic_error("level bracket failed for " + to_string(t));
  }
  // Same level read off from -n/m: u_{N+1} < |n|/M <= u_N with u_N = (3N-1)/(3N-2).
  const std::int64_t nabs = std::abs(t.n);
  if (!((3 * N + 2) * M < nabs * (3 * N + 1) && nabs * (3 * N - 2) <= (3 * N - 1) * M)) {
    throw std::logic_error("u_N bracket disagrees with the level of " + to_string(t));
  }

  LevelSlope ls;
  ls.level = N;
  ls.p = (3 * N + 1) * L - (2 * N + 1) * M;
  ls.q = (2 * N - 1) * M - (3 * N - 2) * L;
  if (!ls.valid()) throw std::logic_error("computed label is not admissible for " + to_string(t));
  return ls;
}

LissajousType type_of(const LevelSlope& ls) {
  require_label(ls);
  const std::int64_t N = ls.level;
  const std::int64_t M = ls.p * (3 * N - 2) + ls.q * (3 * N + 1);
  const std::int64_t L = ls.p * (2 * N - 1) + ls.q * (2 * N + 1);
  return {with_residue_one(M), with_residue_one(3 * L - M)};
}

std::vector<std::int64_t> cluster_radii(const LevelSlope& ls) {
  require_label(ls);
  return varphi_n(ls.level, palindromic_conjugate(christoffel(ls.slope())));
}

ClusterSeq clusters_of(const LevelSlope& ls) {
  ClusterSeq out;
  out.radii = cluster_radii(ls);
  out.first_letter = type_of(ls).m > 0 ? FriezeLetter::d : FriezeLetter::b;

  std::vector<FriezeLetter> raw;
  FriezeLetter lead = out.first_letter;
  for (std::int64_t r : out.radii) {
    for (std::int64_t i = 0; i + 1 < r; ++i) {
      raw.push_back(lead);
      raw.push_back(sibling(lead));
    }
    raw.push_back(lead);
    lead = partner(lead);
  }
  out.letters = reduce_frieze(raw);
  if (out.letters.size() != raw.size()) throw std::logic_error("cluster concatenation is not reduced");
  return out;
}

bool class_equal(const LissajousType& t1, const LissajousType& t2) {
  return reduce_to_p0(normalize(t1)).type == reduce_to_p0(normalize(t2)).type;
}

std::vector<LissajousType> enumerate_p0(std::int64_t max_m) {
  std::vector<LissajousType> out;
  for (std::int64_t M = 1; M <= max_m; ++M) {
    if (M % 3 == 0) continue;
    const std::int64_t m = with_residue_one(M);
    for (std::int64_t nabs = M + 1; nabs <= 2 * M; ++nabs) {
      LissajousType t{m, m > 0 ? -nabs : nabs};
      if (is_primitive(t)) out.push_back(t);
    }
  }
  return out;
}

std::vector<LevelSlope> enumerate_labels(std::int64_t max_level, std::int64_t max_sum) {
  std::vector<LevelSlope> out;
  for (std::int64_t N = 1; N <= max_level; ++N) {
    for (std::int64_t s = 1; s <= max_sum; ++s) {
      if (std::gcd(s, std::int64_t{6}) != 1) continue;
      for (std::int64_t q = 0; q < s; ++q) {
        LevelSlope ls{N, s - q, q};
        if (ls.valid()) out.push_back(ls);
      }
    }
  }
  return out;
}

}  // namespace lissajous
