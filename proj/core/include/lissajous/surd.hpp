#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lissajous/algebra.hpp"
#include "lissajous/quad_surd.hpp"

namespace lissajous {

// Roots of c x^2 + (d - a) x - b = 0, '+' root first.
std::pair<QuadSurd, QuadSurd> fixed_points(const Psl2Mat& m);

// The fixed point of larger absolute value, decided exactly.
QuadSurd far_endpoint(const Psl2Mat& m);

// Whether the period is cyclically the same bi-infinite word as (2 r_i - 1).
bool matches_cluster_period(const CfExpansion& cf, const std::vector<std::int64_t>& radii);

}  // namespace lissajous
