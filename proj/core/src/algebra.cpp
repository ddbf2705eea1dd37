#include "lissajous/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "lissajous/error.hpp"

namespace lissajous {

namespace {

FriezeLetter letter_from(int factor, int exponent) {
  if (factor == 1) return exponent == 1 ? FriezeLetter::p : FriezeLetter::b;
  return exponent == 1 ? FriezeLetter::q : FriezeLetter::d;
}

bool starts_with(std::string_view s, std::size_t pos, std::string_view token) {
  return s.substr(pos, token.size()) == token;
}

constexpr std::string_view kMiddleDot = "·";
constexpr std::string_view kSuperMinusOne = "⁻¹";

}  // namespace

int factor_of(FriezeLetter x) {
  return (x == FriezeLetter::p || x == FriezeLetter::b) ? 1 : 2;
}

int exponent_of(FriezeLetter x) {
  return (x == FriezeLetter::p || x == FriezeLetter::q) ? 1 : 2;
}

FriezeLetter inverse(FriezeLetter x) {
  switch (x) {
    case FriezeLetter::p: return FriezeLetter::b;
    case FriezeLetter::b: return FriezeLetter::p;
    case FriezeLetter::q: return FriezeLetter::d;
    case FriezeLetter::d: return FriezeLetter::q;
  }
  return x;
}

char to_char(FriezeLetter x) {
  static constexpr char names[] = {'p', 'b', 'q', 'd'};
  return names[static_cast<int>(x)];
}

std::vector<FriezeLetter> parse_frieze_letters(std::string_view text) {
  std::vector<FriezeLetter> out;
  for (std::size_t i = 0; i < text.size();) {
    if (starts_with(text, i, kMiddleDot)) {
      i += kMiddleDot.size();
      continue;
    }
    switch (text[i]) {
      case 'p': out.push_back(FriezeLetter::p); break;
      case 'b': out.push_back(FriezeLetter::b); break;
      case 'q': out.push_back(FriezeLetter::q); break;
      case 'd': out.push_back(FriezeLetter::d); break;
      case ' ':
      case '.': break;
      default:
        throw Error(ErrorKind::ParseError, "unexpected character in frieze word: '" +
                                               std::string(1, text[i]) + "'");
    }
    ++i;
  }
  return out;
}

FriezeWord reduce_frieze(std::span<const FriezeLetter> raw) {
  std::vector<FriezeLetter> stack;
  stack.reserve(raw.size());
  for (FriezeLetter x : raw) {
    if (!stack.empty() && factor_of(stack.back()) == factor_of(x)) {
      int e = (exponent_of(stack.back()) + exponent_of(x)) % 3;
      stack.pop_back();
      if (e != 0) stack.push_back(letter_from(factor_of(x), e));
    } else {
      stack.push_back(x);
    }
  }
  return FriezeWord(std::move(stack));
}

FriezeWord FriezeWord::parse(std::string_view text) {
  return reduce_frieze(parse_frieze_letters(text));
}

FriezeWord FriezeWord::inverse() const {
  std::vector<FriezeLetter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = lissajous::inverse(x);
  return FriezeWord(std::move(out));
}

std::string FriezeWord::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (FriezeLetter x : letters_) s.push_back(to_char(x));
  return s;
}

FriezeWord operator*(const FriezeWord& u, const FriezeWord& v) {
  std::vector<FriezeLetter> raw = u.letters_;
  raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
  return reduce_frieze(raw);
}

AbWord AbWord::parse(std::string_view text) {
  AbWord w;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == ' ') {
      ++i;
    } else if (c == 'A') {
      w.symbols.push_back(AbSymbol::A);
      ++i;
    } else if (c == 'B') {
      ++i;
      if (starts_with(text, i, kSuperMinusOne)) {
        w.symbols.push_back(AbSymbol::BInv);
        i += kSuperMinusOne.size();
      } else if (starts_with(text, i, "^-1")) {
        w.symbols.push_back(AbSymbol::BInv);
        i += 3;
      } else {
        w.symbols.push_back(AbSymbol::B);
      }
    } else {
      throw Error(ErrorKind::ParseError,
                  "unexpected character in AB word: '" + std::string(1, c) + "'");
    }
  }
  return w;
}

std::string AbWord::to_string() const {
  std::string s;
  for (AbSymbol x : symbols) {
    switch (x) {
      case AbSymbol::A: s += 'A'; break;
      case AbSymbol::B: s += 'B'; break;
      case AbSymbol::BInv: s += "BB"; break;
    }
  }
  return s;
}

std::size_t AbWord::count_a() const {
  return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), AbSymbol::A));
}

Psl2Mat::Psl2Mat() : a_(1), b_(0), c_(0), d_(1) {}

Psl2Mat::Psl2Mat(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw std::invalid_argument("matrix determinant is not 1");
  normalize_sign();
}

void Psl2Mat::normalize_sign() {
  const Integer& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : c_);
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Psl2Mat Psl2Mat::gen_A() { return Psl2Mat(0, 1, -1, 0); }
Psl2Mat Psl2Mat::gen_B() { return Psl2Mat(1, 1, -1, 0); }

Psl2Mat Psl2Mat::of(FriezeLetter x) {
  switch (x) {
    case FriezeLetter::p: return Psl2Mat(1, 1, -1, 0);
    case FriezeLetter::b: return Psl2Mat(0, 1, -1, -1);
    case FriezeLetter::q: return Psl2Mat(0, -1, 1, -1);
    case FriezeLetter::d: return Psl2Mat(1, -1, 1, 0);
  }
  return Psl2Mat();
}

Psl2Mat Psl2Mat::inverse() const { return Psl2Mat(d_, -b_, -c_, a_); }

std::string Psl2Mat::to_string() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

Psl2Mat operator*(const Psl2Mat& x, const Psl2Mat& y) {
  Psl2Mat r;
  r.a_ = x.a_ * y.a_ + x.b_ * y.c_;
  r.b_ = x.a_ * y.b_ + x.b_ * y.d_;
  r.c_ = x.c_ * y.a_ + x.d_ * y.c_;
  r.d_ = x.c_ * y.b_ + x.d_ * y.d_;
  r.normalize_sign();
  return r;
}

Perm3::Perm3(std::array<int, 3> image) : image_(image) {
  std::array<int, 3> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("not a permutation of {1,2,3}");
}

Perm3 Perm3::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 1; i <= 3; ++i) inv[image_[i - 1] - 1] = i;
  return Perm3(inv);
}

std::string Perm3::to_string() const {
  std::string out;
  std::array<bool, 3> seen{};
  for (int start = 1; start <= 3; ++start) {
    if (seen[start - 1] || image_[start - 1] == start) continue;
    out += '(';
    for (int i = start; !seen[i - 1]; i = image_[i - 1]) {
      seen[i - 1] = true;
      out += static_cast<char>('0' + i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm3 operator*(const Perm3& x, const Perm3& y) {
  return Perm3({x(y(1)), x(y(2)), x(y(3))});
}

std::string_view to_string(TraceClass c) {
  switch (c) {
    case TraceClass::elliptic: return "elliptic";
    case TraceClass::parabolic: return "parabolic";
    case TraceClass::hyperbolic: return "hyperbolic";
  }
  return "";
}

Psl2Mat frieze_to_matrix(const FriezeWord& w) {
  Psl2Mat m;
  for (FriezeLetter x : w.letters()) m = m * Psl2Mat::of(x);
  return m;
}

Psl2Mat ab_to_matrix(const AbWord& w) {
  const Psl2Mat A = Psl2Mat::gen_A();
  const Psl2Mat B = Psl2Mat::gen_B();
  const Psl2Mat Binv = B.inverse();
  Psl2Mat m;
  for (AbSymbol x : w.symbols) {
    m = m * (x == AbSymbol::A ? A : (x == AbSymbol::B ? B : Binv));
  }
  return m;
}

FriezeWord ab_to_frieze(const AbWord& w) {
  if (w.count_a() % 2 != 0) {
    throw Error(ErrorKind::OddACount, "word " + w.to_string() + " has an odd number of A");
  }
  std::vector<FriezeLetter> raw;
  bool odd = false;
  for (AbSymbol x : w.symbols) {
    switch (x) {
      case AbSymbol::A: odd = !odd; break;
      case AbSymbol::B: raw.push_back(odd ? FriezeLetter::q : FriezeLetter::p); break;
      case AbSymbol::BInv: raw.push_back(odd ? FriezeLetter::d : FriezeLetter::b); break;
    }
  }
  return reduce_frieze(raw);
}

Perm3 s3_image(const FriezeWord& w) {
  Perm3 r;
  for (FriezeLetter x : w.letters()) {
    bool forward = x == FriezeLetter::p || x == FriezeLetter::d;
    r = r * (forward ? Perm3::cycle123() : Perm3::cycle132());
  }
  return r;
}

TraceClass trace_class(const Psl2Mat& m) {
  Integer t = abs(m.trace());
  if (t < 2) return TraceClass::elliptic;
  if (t == 2) return TraceClass::parabolic;
  return TraceClass::hyperbolic;
}

FriezeWord a_conjugate(const FriezeWord& w) {
  std::vector<FriezeLetter> out;
  out.reserve(w.size());
  for (FriezeLetter x : w.letters()) {
    switch (x) {
      case FriezeLetter::p: out.push_back(FriezeLetter::q); break;
      case FriezeLetter::q: out.push_back(FriezeLetter::p); break;
      case FriezeLetter::b: out.push_back(FriezeLetter::d); break;
      case FriezeLetter::d: out.push_back(FriezeLetter::b); break;
    }
  }
  return reduce_frieze(out);
}

FriezeWord second_half(const FriezeWord& h) {
  const auto& xs = h.letters();
  if (!std::equal(xs.begin(), xs.end(), xs.rbegin())) {
    throw Error(ErrorKind::NotPalindromic, "frieze word " + h.to_string() + " is not a palindrome");
  }
  // A h^{-1} A: reversing is free for a palindrome, so only the letter map remains.
  return a_conjugate(h.inverse());
}

FriezeWord cyclic_reduction(const FriezeWord& w) {
  std::vector<FriezeLetter> xs = w.letters();
  while (xs.size() >= 2 && factor_of(xs.front()) == factor_of(xs.back())) {
    int f = factor_of(xs.front());
    int e = (exponent_of(xs.front()) + exponent_of(xs.back())) % 3;
    xs.pop_back();
    xs.erase(xs.begin());
    if (e != 0) {
      xs.insert(xs.begin(), letter_from(f, e));
      break;
    }
  }
  return reduce_frieze(xs);
}

bool cyclically_equal(const FriezeWord& w1, const FriezeWord& w2) {
  const auto u = cyclic_reduction(w1).letters();
  const auto v = cyclic_reduction(w2).letters();
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  std::vector<FriezeLetter> doubled(u);
  doubled.insert(doubled.end(), u.begin(), u.end());
  return std::search(doubled.begin(), doubled.end(), v.begin(), v.end()) != doubled.end();
}

QuadSurd dilatation(const Psl2Mat& m) {
  if (trace_class(m) != TraceClass::hyperbolic) {
    throw Error(ErrorKind::NotHyperbolic, "matrix " + m.to_string() + " is not hyperbolic");
  }
  Integer t = abs(m.trace());
  return QuadSurd(t, 2, t * t - 4);
}

}  // namespace lissajous
