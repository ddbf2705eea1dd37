#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lissajous/algebra.hpp"
#include "lissajous/lissajous.hpp"
#include "lissajous/syzygy.hpp"

namespace lissajous::shape {

using Complex = std::complex<double>;

struct TraceConfig {
  double ratio = 0.05;  // amplitude ratio B/A of the Lissajous curve
  int max_halvings = 20;
  double border_tolerance = 1e-9;
  double region_tolerance = 1e-12;
  double collision_threshold = 1e-6;
  double free_threshold = 1e-3;
  std::size_t scan_steps = 4000;
  std::size_t refine_candidates = 8;
  std::size_t samples_per_crossing = 16;
  std::size_t itinerary_steps = 20000;
};

struct ShapeSample {
  double t = 0.0;
  Complex psi;
};

enum class Sector { I, II, III };
// Outside the unit circle is the negative hemisphere.
enum class Hemisphere { negative, positive };

struct Region {
  Sector sector = Sector::I;
  Hemisphere hemisphere = Hemisphere::negative;

  std::string label() const;  // "I-", "III+", ...
  friend bool operator==(const Region&, const Region&) = default;
};

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

struct FareyEdge {
  Fraction left;
  Fraction right;
};

struct SyzygyAlignment {
  bool matched = false;
  std::size_t rotation = 0;
  bool mirrored = false;
};

// The tracer starts just before t = 0 when ell > 0 and just after when ell < 0.
double start_offset(const NormalizedType& nt);

Complex shape_function(Complex a, Complex b, Complex c);
Complex lissajous_point(std::int64_t m, std::int64_t n, double ratio, double t);
// Shape of the triangle (L(t-1/3), L(t), L(t+1/3)) computed from the positions.
Complex shape_direct(const NormalizedType& nt, double ratio, double t);
// Closed form of the same shape along the curve.
Complex shape_formula(const NormalizedType& nt, double ratio, double t);

std::vector<ShapeSample> sample_curve(const NormalizedType& nt, double ratio, std::size_t steps);
std::vector<int> epsilon_oracle(const NormalizedType& nt, const TraceConfig& config = {});
double collision_scan(const LissajousType& t, std::size_t steps, std::size_t candidates = 8);

// Arcs crossed over one full period, rotated to begin at the first 1.
SyzygySeq syzygy_oracle(const NormalizedType& nt, const TraceConfig& config = {});

// Finds a rotation taking `numeric` (optionally after the 2<->3 relabel)
// onto `symbolic`.
SyzygyAlignment align_syzygy(const SyzygySeq& numeric, const SyzygySeq& symbolic, bool mirror);

// The curve turns clockwise on the shape sphere when m* > 0, which reads
// the arcs in the order 1, 3, 2.
bool expects_mirror(const NormalizedType& nt);

Region region_of(Complex psi, double tolerance = 1e-12);
std::vector<Region> region_itinerary(const NormalizedType& nt, const TraceConfig& config = {});

std::vector<FareyEdge> farey_edges(std::int64_t max_denominator);

void svg_shape(const NormalizedType& nt, double ratio, std::size_t steps, const std::string& path);
void svg_halfplane(const Psl2Mat& mat, std::int64_t max_denominator, const std::string& path);
void write_csv(const std::vector<ShapeSample>& samples, const std::string& path);

}  // namespace lissajous::shape
