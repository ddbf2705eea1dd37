#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lissajous/integer.hpp"
#include "lissajous/quad_surd.hpp"

namespace lissajous {

// Letters of the free product <p> * <q> of two cyclic groups of order 3,
// with b = p^2 and d = q^2.
enum class FriezeLetter : std::uint8_t { p, b, q, d };

int factor_of(FriezeLetter x);    // 1 for p,b and 2 for q,d
int exponent_of(FriezeLetter x);  // 1 for p,q and 2 for b,d
FriezeLetter inverse(FriezeLetter x);
char to_char(FriezeLetter x);

// Accepts the characters p,b,q,d. Spaces, '.' and the middle dot used as a
// visual separator are skipped. Anything else throws ParseError.
std::vector<FriezeLetter> parse_frieze_letters(std::string_view text);

class FriezeWord {
 public:
  FriezeWord() = default;

  // Parses and reduces.
  static FriezeWord parse(std::string_view text);

  const std::vector<FriezeLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  FriezeLetter operator[](std::size_t i) const { return letters_[i]; }

  FriezeWord inverse() const;
  std::string to_string() const;

  friend FriezeWord operator*(const FriezeWord& u, const FriezeWord& v);
  friend bool operator==(const FriezeWord&, const FriezeWord&) = default;

 private:
  explicit FriezeWord(std::vector<FriezeLetter> reduced) : letters_(std::move(reduced)) {}
  friend FriezeWord reduce_frieze(std::span<const FriezeLetter> raw);

  std::vector<FriezeLetter> letters_;
};

FriezeWord reduce_frieze(std::span<const FriezeLetter> raw);

enum class AbSymbol : std::uint8_t { A, B, BInv };

struct AbWord {
  std::vector<AbSymbol> symbols;

  // Accepts A, B, and B followed by "⁻¹" or "^-1"; whitespace is ignored.
  static AbWord parse(std::string_view text);
  // B^-1 prints as "BB".
  std::string to_string() const;
  std::size_t count_a() const;

  friend bool operator==(const AbWord&, const AbWord&) = default;
};

// Element of PSL2(Z), stored as the representative whose first nonzero
// entry in the order (a, b, c, d) is positive.
class Psl2Mat {
 public:
  Psl2Mat();
  // Throws std::invalid_argument unless ad - bc = 1.
  Psl2Mat(Integer a, Integer b, Integer c, Integer d);

  static Psl2Mat gen_A();
  static Psl2Mat gen_B();
  static Psl2Mat of(FriezeLetter x);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer trace() const { return a_ + d_; }

  Psl2Mat inverse() const;
  std::string to_string() const;  // [[a,b],[c,d]]

  friend Psl2Mat operator*(const Psl2Mat& x, const Psl2Mat& y);
  friend bool operator==(const Psl2Mat&, const Psl2Mat&) = default;

 private:
  void normalize_sign();
  Integer a_, b_, c_, d_;
};

class Perm3 {
 public:
  Perm3() : image_{1, 2, 3} {}
  explicit Perm3(std::array<int, 3> image);

  static Perm3 identity() { return Perm3(); }
  static Perm3 cycle123() { return Perm3({2, 3, 1}); }
  static Perm3 cycle132() { return Perm3({3, 1, 2}); }
  static Perm3 swap13() { return Perm3({3, 2, 1}); }

  int operator()(int i) const { return image_[i - 1]; }
  Perm3 inverse() const;
  // Cycle notation: "()", "(13)", "(123)", ...
  std::string to_string() const;

  // (x * y)(i) = x(y(i))
  friend Perm3 operator*(const Perm3& x, const Perm3& y);
  friend bool operator==(const Perm3&, const Perm3&) = default;

 private:
  std::array<int, 3> image_;
};

enum class TraceClass { elliptic, parabolic, hyperbolic };

std::string_view to_string(TraceClass c);

Psl2Mat frieze_to_matrix(const FriezeWord& w);
Psl2Mat ab_to_matrix(const AbWord& w);
FriezeWord ab_to_frieze(const AbWord& w);
Perm3 s3_image(const FriezeWord& w);
TraceClass trace_class(const Psl2Mat& m);
FriezeWord a_conjugate(const FriezeWord& w);
FriezeWord second_half(const FriezeWord& h);
FriezeWord cyclic_reduction(const FriezeWord& w);
bool cyclically_equal(const FriezeWord& w1, const FriezeWord& w2);
QuadSurd dilatation(const Psl2Mat& m);

}  // namespace lissajous
