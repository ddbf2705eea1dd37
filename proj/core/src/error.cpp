#include "lissajous/error.hpp"

namespace lissajous {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OddACount: return "OddACount";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::TranslationForm: return "TranslationForm";
    case ErrorKind::DivisibleByThree: return "DivisibleByThree";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::CollisionType: return "CollisionType";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::NoPalindrome: return "NoPalindrome";
    case ErrorKind::MultiplePalindromes: return "MultiplePalindromes";
    case ErrorKind::AllOnes: return "AllOnes";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::BorderHit: return "BorderHit";
    case ErrorKind::OnBorder: return "OnBorder";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace lissajous
