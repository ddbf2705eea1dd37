#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lissajous {

// Finite word over {0,1}, stored as the ASCII characters '0' and '1'.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string symbols);

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int operator[](std::size_t i) const { return symbols_[i] - '0'; }

  std::size_t count(int symbol) const;
  BinaryWord rotated(std::size_t shift) const;
  bool is_palindrome() const;
  bool is_rotation_of(const BinaryWord& other) const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::string symbols_;
};

struct Slope {
  std::int64_t p = 1;  // denominator, positive
  std::int64_t q = 0;  // numerator, nonnegative
};

BinaryWord christoffel(const Slope& s);
BinaryWord palindromic_conjugate(const BinaryWord& w);
BinaryWord phi_n(std::int64_t level, const BinaryWord& w);
std::vector<std::int64_t> varphi_n(std::int64_t level, const BinaryWord& w);
BinaryWord difference_seq(std::int64_t m_abs, std::int64_t ell_abs);
std::set<std::size_t> cluster_lengths(const BinaryWord& w, bool cyclic);

}  // namespace lissajous
