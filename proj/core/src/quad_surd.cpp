#include "lissajous/quad_surd.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace lissajous {

namespace {

// Splits n > 0 as c^2 * r, pulling out every square made of primes below
// the trial bound; a leftover perfect square is absorbed as well.
std::pair<Integer, Integer> split_square(Integer n) {
  Integer c = 1;
  for (std::uint64_t f = 2; f < 100000 && Integer(f) * f <= n; ++f) {
    Integer ff = Integer(f) * f;
    while (n % ff == 0) {
      n /= ff;
      c *= f;
    }
  }
  if (n > 1 && is_square(n)) {
    c *= isqrt(n);
    n = 1;
  }
  return {c, n};
}

int sgn(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

QuadSurd::QuadSurd(Integer p, Integer q, Integer d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_ == 0) throw std::invalid_argument("quadratic surd with zero denominator");
  if (d_ <= 0 || is_square(d_)) throw std::invalid_argument("quadratic surd radicand must be a positive nonsquare");
  if ((d_ - p_ * p_) % q_ != 0) {
    Integer aq = abs(q_);
    p_ *= aq;
    d_ *= q_ * q_;
    q_ *= aq;
  }
}

QuadSurd QuadSurd::conjugate() const { return QuadSurd(-p_, -q_, d_); }

double QuadSurd::approx() const {
  using real = long double;
  real root = std::sqrt(d_.convert_to<real>());
  real q = q_.convert_to<real>();
  if (p_ >= 0) return static_cast<double>((p_.convert_to<real>() + root) / q);
  // P + sqrt(D) = (D - P^2) / (sqrt(D) - P) avoids cancellation for P < 0.
  real num = Integer(d_ - p_ * p_).convert_to<real>();
  return static_cast<double>(num / ((root - p_.convert_to<real>()) * q));
}

std::string QuadSurd::to_string() const {
  auto [c, r] = split_square(d_);
  Integer p = p_;
  Integer q = q_;
  if (q < 0) {
    p = -p;
    q = -q;
    c = -c;
  }
  Integer g = gcd(gcd(p, c), q);
  p /= g;
  c /= g;
  q /= g;

  std::string num;
  if (p != 0) num += p.str();
  if (c < 0) {
    num += "-";
  } else if (p != 0) {
    num += "+";
  }
  if (abs(c) != 1) num += Integer(abs(c)).str();
  num += "√" + r.str();
  if (q == 1) return num;
  return "(" + num + ")/" + q.str();
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  return sgn(x.q_) == sgn(y.q_) && x.p_ * y.q_ == y.p_ * x.q_ &&
         x.d_ * y.q_ * y.q_ == y.d_ * x.q_ * x.q_;
}

CfExpansion cf_expand(const QuadSurd& x) {
  const Integer& D = x.D();
  const Integer s = isqrt(D);
  Integer P = x.P();
  Integer Q = x.Q();

  std::vector<Integer> terms;
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  while (true) {
    auto [it, fresh] = seen.emplace(std::make_pair(P, Q), terms.size());
    if (!fresh) {
      CfExpansion cf;
      cf.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(it->second));
      cf.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(it->second), terms.end());
      return cf;
    }
    if ((D - P * P) % Q != 0) throw std::logic_error("continued fraction state lost Q | D - P^2");
    // floor((P + sqrt D)/Q) from the integer square root; for Q < 0 the
    // numerator's floor is -P - s - 1 after negating both parts.
    Integer a = Q > 0 ? floor_div(P + s, Q) : floor_div(-P - s - 1, -Q);
    terms.push_back(a);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

double approx(const QuadSurd& x) { return x.approx(); }

double evaluate_convergent(const std::vector<Integer>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty continued fraction");
  long double v = terms.back().convert_to<long double>();
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    v = terms[i].convert_to<long double>() + 1.0L / v;
  }
  return static_cast<double>(v);
}

std::vector<Integer> unroll(const CfExpansion& cf, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  for (std::size_t i = 0; out.size() < count; ++i) {
    if (i < cf.preperiod.size()) {
      out.push_back(cf.preperiod[i]);
    } else {
      if (cf.period.empty()) break;
      out.push_back(cf.period[(i - cf.preperiod.size()) % cf.period.size()]);
    }
  }
  return out;
}

}  // namespace lissajous
