#pragma once

#include <cstdint>
#include <string>

#include "lissajous/classify.hpp"
#include "lissajous/lissajous.hpp"

namespace lissajous {

class SignWord {
 public:
  SignWord() = default;
  explicit SignWord(std::string signs);  // characters '+' and '-'

  const std::string& str() const { return signs_; }
  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i] == '+' ? 1 : -1; }

  friend bool operator==(const SignWord&, const SignWord&) = default;

 private:
  std::string signs_;
};

// Cyclic word over the equator arcs 1, 2, 3.
class SyzygySeq {
 public:
  SyzygySeq() = default;
  explicit SyzygySeq(std::string digits);

  const std::string& str() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  int operator[](std::size_t i) const { return digits_[i] - '0'; }

  SyzygySeq rotated(std::size_t shift) const;
  // Exchange of the labels 2 and 3, i.e. the same arcs read clockwise.
  SyzygySeq mirrored() const;
  // Inserts '.' between consecutive blocks of `block` letters.
  std::string grouped(std::size_t block) const;

  friend bool operator==(const SyzygySeq&, const SyzygySeq&) = default;

 private:
  std::string digits_;
};

SignWord omega(const LevelSlope& ls);
SyzygySeq syzygy_sequence(const LissajousType& t, std::int64_t periods);
bool is_reduced(const SyzygySeq& s);

}  // namespace lissajous
