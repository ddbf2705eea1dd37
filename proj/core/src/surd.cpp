#include "lissajous/surd.hpp"

#include <algorithm>

#include "lissajous/error.hpp"

namespace lissajous {

namespace {

// Smallest prefix whose repetition gives the whole word.
std::vector<Integer> primitive_root(const std::vector<Integer>& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = w[i] == w[i - len];
    if (ok) return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len)};
  }
  return w;
}

bool rotation_equal(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  if (u.size() != v.size()) return false;
  std::vector<Integer> doubled(u);
  doubled.insert(doubled.end(), u.begin(), u.end());
  return std::search(doubled.begin(), doubled.end(), v.begin(), v.end()) != doubled.end();
}

}  // namespace

std::pair<QuadSurd, QuadSurd> fixed_points(const Psl2Mat& m) {
  if (trace_class(m) != TraceClass::hyperbolic) {
    throw Error(ErrorKind::NotHyperbolic, "matrix " + m.to_string() + " is not hyperbolic");
  }
  if (m.c() == 0) throw Error(ErrorKind::TranslationForm, "matrix " + m.to_string() + " fixes infinity");
  Integer g = gcd(gcd(m.c(), m.d() - m.a()), m.b());
  Integer c = m.c() / g;
  Integer lin = (m.d() - m.a()) / g;  // d' - a'
  Integer b = m.b() / g;
  Integer disc = lin * lin + 4 * b * c;
  QuadSurd plus(-lin, 2 * c, disc);
  return {plus, plus.conjugate()};
}

QuadSurd far_endpoint(const Psl2Mat& m) {
  auto [plus, minus] = fixed_points(m);
  // r+^2 - r-^2 = 4 P sqrt(D) / Q^2 has the sign of P = a' - d'.
  return plus.P() >= 0 ? plus : minus;
}

bool matches_cluster_period(const CfExpansion& cf, const std::vector<std::int64_t>& radii) {
  if (cf.period.empty() || radii.empty()) return false;
  std::vector<Integer> expected;
  expected.reserve(radii.size());
  for (std::int64_t r : radii) expected.emplace_back(2 * r - 1);
  return rotation_equal(primitive_root(cf.period), primitive_root(expected));
}

}  // namespace lissajous
