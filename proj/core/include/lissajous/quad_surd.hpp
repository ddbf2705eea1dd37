#pragma once

#include <string>
#include <vector>

#include "lissajous/integer.hpp"

namespace lissajous {

// The real number (P + sqrt(D)) / Q with D > 0 not a perfect square.
// The constructor rescales so that Q divides D - P*P, which keeps the
// continued-fraction recurrence integral.
class QuadSurd {
 public:
  QuadSurd(Integer p, Integer q, Integer d);

  const Integer& P() const { return p_; }
  const Integer& Q() const { return q_; }
  const Integer& D() const { return d_; }

  // Galois conjugate (P - sqrt(D)) / Q, kept in the same form.
  QuadSurd conjugate() const;

  double approx() const;

  // "(P+c√d)/Q" with the square part of D pulled out of the radical.
  std::string to_string() const;

  friend bool operator==(const QuadSurd& x, const QuadSurd& y);

 private:
  Integer p_;
  Integer q_;
  Integer d_;
};

struct CfExpansion {
  std::vector<Integer> preperiod;
  std::vector<Integer> period;
};

CfExpansion cf_expand(const QuadSurd& x);

double approx(const QuadSurd& x);

// Value of the finite continued fraction [a0; a1, ..., a_{n-1}].
double evaluate_convergent(const std::vector<Integer>& terms);

// First `count` partial quotients of an eventually periodic expansion.
std::vector<Integer> unroll(const CfExpansion& cf, std::size_t count);

}  // namespace lissajous
