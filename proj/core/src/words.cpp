#include "lissajous/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lissajous/error.hpp"
#include "lissajous/integer.hpp"

namespace lissajous {

BinaryWord::BinaryWord(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "binary word may only contain 0 and 1: " + symbols_);
  }
}

std::size_t BinaryWord::count(int symbol) const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), static_cast<char>('0' + symbol)));
}

BinaryWord BinaryWord::rotated(std::size_t shift) const {
  if (symbols_.empty()) return *this;
  shift %= symbols_.size();
  return BinaryWord(symbols_.substr(shift) + symbols_.substr(0, shift));
}

bool BinaryWord::is_palindrome() const {
  return std::equal(symbols_.begin(), symbols_.end(), symbols_.rbegin());
}

bool BinaryWord::is_rotation_of(const BinaryWord& other) const {
  return size() == other.size() && (symbols_ + symbols_).find(other.symbols_) != std::string::npos;
}

BinaryWord christoffel(const Slope& s) {
  if (s.p <= 0 || s.q < 0 || std::gcd(s.p, s.q) != 1) {
    throw std::invalid_argument("christoffel slope must satisfy p > 0, q >= 0, gcd(p,q) = 1");
  }
  const std::int64_t len = s.p + s.q;
  std::string out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t k = 1; k <= len; ++k) {
    out.push_back(static_cast<char>('0' + (s.q * k) / len - (s.q * (k - 1)) / len));
  }
  return BinaryWord(std::move(out));
}

BinaryWord palindromic_conjugate(const BinaryWord& w) {
  std::vector<BinaryWord> found;
  for (std::size_t r = 0; r < std::max<std::size_t>(w.size(), 1); ++r) {
    BinaryWord c = w.rotated(r);
    if (c.is_palindrome() && std::find(found.begin(), found.end(), c) == found.end()) found.push_back(c);
  }
  if (found.empty()) throw Error(ErrorKind::NoPalindrome, "no rotation of " + w.str() + " is a palindrome");
  if (found.size() > 1) {
    throw Error(ErrorKind::MultiplePalindromes, w.str() + " has more than one palindromic rotation");
  }
  return found.front();
}

BinaryWord phi_n(std::int64_t level, const BinaryWord& w) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  std::string image0;
  for (std::int64_t i = 0; i + 1 < level; ++i) image0 += "101";
  std::string image1 = image0 + "101";
  image0 += '1';
  image1 += '1';
  std::string out;
  for (char c : w.str()) out += (c == '0' ? image0 : image1);
  return BinaryWord(std::move(out));
}

std::vector<std::int64_t> varphi_n(std::int64_t level, const BinaryWord& w) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(level + w[i]);
  return out;
}

BinaryWord difference_seq(std::int64_t m_abs, std::int64_t ell_abs) {
  if (m_abs <= 0 || ell_abs <= 0 || ell_abs > m_abs || std::gcd(m_abs, ell_abs) != 1) {
    throw std::invalid_argument("difference_seq needs coprime 0 < ell <= m");
  }
  std::string out;
  out.reserve(static_cast<std::size_t>(m_abs));
  for (std::int64_t k = 1; k <= m_abs; ++k) {
    std::int64_t hi = floor_div(ell_abs * (2 * k + 1), 2 * m_abs);
    std::int64_t lo = floor_div(ell_abs * (2 * k - 1), 2 * m_abs);
    out.push_back(static_cast<char>('0' + (hi - lo)));
  }
  return BinaryWord(std::move(out));
}

std::set<std::size_t> cluster_lengths(const BinaryWord& w, bool cyclic) {
  std::string s = w.str();
  if (cyclic && !s.empty()) {
    std::size_t zero = s.find('0');
    if (zero == std::string::npos) throw Error(ErrorKind::AllOnes, "cyclic word has no 0: " + s);
    // Starting right after a 0 means no run wraps around the end.
    s = s.substr(zero + 1) + s.substr(0, zero + 1);
  }
  std::set<std::size_t> lengths;
  std::size_t run = 0;
  for (char c : s) {
    if (c == '1') {
      ++run;
    } else if (run > 0) {
      lengths.insert(run);
      run = 0;
    }
  }
  if (run > 0) lengths.insert(run);
  return lengths;
}

}  // namespace lissajous
