#include "lissajous/syzygy.hpp"

#include <stdexcept>

#include "lissajous/error.hpp"

namespace lissajous {

SignWord::SignWord(std::string signs) : signs_(std::move(signs)) {
  if (signs_.find_first_not_of("+-") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "sign word may only contain + and -: " + signs_);
  }
}

SyzygySeq::SyzygySeq(std::string digits) : digits_(std::move(digits)) {
  if (digits_.find_first_not_of("123") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "syzygy sequence may only contain 1, 2, 3: " + digits_);
  }
}

SyzygySeq SyzygySeq::rotated(std::size_t shift) const {
  if (digits_.empty()) return *this;
  shift %= digits_.size();
  return SyzygySeq(digits_.substr(shift) + digits_.substr(0, shift));
}

SyzygySeq SyzygySeq::mirrored() const {
  std::string out = digits_;
  for (char& c : out) {
    if (c == '2') {
      c = '3';
    } else if (c == '3') {
      c = '2';
    }
  }
  return SyzygySeq(std::move(out));
}

std::string SyzygySeq::grouped(std::size_t block) const {
  if (block == 0) return digits_;
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0 && i % block == 0) out += '.';
    out += digits_[i];
  }
  return out;
}

SignWord omega(const LevelSlope& ls) {
  std::string out;
  for (std::int64_t r : cluster_radii(ls)) {
    for (std::int64_t i = 0; i + 1 < r; ++i) out += "+-";
    out += '+';
  }
  return SignWord(std::move(out));
}

SyzygySeq syzygy_sequence(const LissajousType& t, std::int64_t periods) {
  if (periods < 1) throw std::invalid_argument("periods must be positive");
  const SignWord w = omega(level_slope_of(t));
  const std::size_t total = 6 * static_cast<std::size_t>(periods) * w.size();
  std::string out;
  out.reserve(total);
  int a = 1;
  for (std::size_t i = 0; i < total; ++i) {
    out.push_back(static_cast<char>('0' + a));
    a = static_cast<int>(mod_floor(a - 1 + w[i % w.size()], 3)) + 1;
  }
  if (a != 1) throw std::logic_error("syzygy walk did not close after a full period");
  return SyzygySeq(std::move(out));
}

bool is_reduced(const SyzygySeq& s) {
  const std::string& d = s.str();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == d[(i + 1) % d.size()] && d.size() > 1) return false;
  }
  return true;
}

}  // namespace lissajous
