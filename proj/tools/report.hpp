#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lissajous/algebra.hpp"
#include "lissajous/classify.hpp"
#include "lissajous/lissajous.hpp"
#include "lissajous/quad_surd.hpp"
#include "lissajous/syzygy.hpp"

namespace lissajous::cli {

struct ClassDetails {
  LissajousType p0;
  LevelSlope label;
  FriezeWord frieze_h;
  FriezeWord frieze_w;
  Psl2Mat matrix;
  QuadSurd dilatation{3, 2, 5};
  QuadSurd far_endpoint{1, 2, 5};
  CfExpansion cf;
  SyzygySeq syzygy;
};

struct Report {
  LissajousType input;
  NormalizedType normalized;
  bool collision_free = false;
  std::optional<ClassDetails> details;  // present iff collision_free
};

// Throws lissajous::Error for types divisible by 3 or not coprime.
Report build_report(const LissajousType& t);

nlohmann::ordered_json to_json(const Report& r);
std::string to_text(const Report& r);

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json integer_json(const Integer& x);
nlohmann::ordered_json cf_json(const CfExpansion& cf);

}  // namespace lissajous::cli
