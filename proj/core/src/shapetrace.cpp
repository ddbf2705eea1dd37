#include "lissajous/shapetrace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lissajous/classify.hpp"
#include "lissajous/error.hpp"
#include "lissajous/surd.hpp"

namespace lissajous::shape {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThird = 2.0 * kPi / 3.0;
const Complex kI(0.0, 1.0);
const Complex kOmega = std::polar(1.0, kThird);

double wrapped_arg(Complex z) {
  double a = std::arg(z);
  return a < 0 ? a + 2.0 * kPi : a;
}

// Distance of an angle to the nearest multiple of 2*pi/3.
double distance_to_third(double theta) {
  double r = std::fmod(theta, kThird);
  return std::min(r, kThird - r);
}

void require_odd(const NormalizedType& nt) {
  if (nt.ell % 2 == 0) throw Error(ErrorKind::CollisionType, "type " + to_string(nt.type()) + " collides");
}

double pairwise_min(const LissajousType& t, double s) {
  Complex a = lissajous_point(t.m, t.n, 1.0, s - 1.0 / 3.0);
  Complex b = lissajous_point(t.m, t.n, 1.0, s);
  Complex c = lissajous_point(t.m, t.n, 1.0, s + 1.0 / 3.0);
  return std::min({std::abs(a - b), std::abs(b - c), std::abs(c - a)});
}

template <typename F>
double golden_min(F f, double lo, double hi, int iterations) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

std::vector<int> epsilon_at(const NormalizedType& nt, double ratio) {
  const std::int64_t M = std::abs(nt.m_star);
  const int ell_sign = sign(nt.ell);
  std::vector<int> bits;
  bits.reserve(2 * M);
  for (std::int64_t k = 1; k <= 2 * M; ++k) {
    double t = 1.0 / (12.0 * M) + static_cast<double>(k - 1) / (6.0 * M);
    double gap = 1.0 - std::abs(shape_formula(nt, ratio, t));
    int side = (gap > 0) - (gap < 0);
    bits.push_back(side == ell_sign ? 0 : 1);
  }
  return bits;
}

std::string crossings_at(const NormalizedType& nt, double ratio, const TraceConfig& config) {
  const double delta = start_offset(nt);
  const std::size_t steps = std::max<std::size_t>(
      1000, config.samples_per_crossing * 6 * static_cast<std::size_t>(std::abs(nt.ell)));
  auto g = [&](double t) { return std::abs(shape_formula(nt, ratio, t)) - 1.0; };

  std::string seq;
  double t0 = delta;
  double g0 = g(t0);
  for (std::size_t i = 1; i <= steps; ++i) {
    double t1 = delta + static_cast<double>(i) / static_cast<double>(steps);
    double g1 = g(t1);
    if ((g0 < 0) != (g1 < 0)) {
      double lo = t0, hi = t1, glo = g0;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      double theta = wrapped_arg(shape_formula(nt, ratio, 0.5 * (lo + hi)));
      if (distance_to_third(theta) < config.border_tolerance) {
        throw Error(ErrorKind::BorderHit, "equator crossing at a collision point");
      }
      seq.push_back(static_cast<char>('1' + static_cast<int>(theta / kThird) % 3));
    }
    t0 = t1;
    g0 = g1;
  }
  return seq;
}

std::string svg_header(const std::string& comment) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n"
         "<!-- " + comment + " -->\n"
         "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path);
}

}  // namespace

std::string Region::label() const {
  static const char* names[] = {"I", "II", "III"};
  return std::string(names[static_cast<int>(sector)]) + (hemisphere == Hemisphere::negative ? "-" : "+");
}

double start_offset(const NormalizedType& nt) {
  return -static_cast<double>(sign(nt.ell)) / (600.0 * std::abs(static_cast<double>(nt.m_star * nt.ell)));
}

Complex shape_function(Complex a, Complex b, Complex c) {
  const Complex w2 = kOmega * kOmega;
  return (a + b * kOmega + c * w2) / (a + b * w2 + c * kOmega);
}

Complex lissajous_point(std::int64_t m, std::int64_t n, double ratio, double t) {
  return {std::sin(2.0 * kPi * m * t), ratio * std::sin(2.0 * kPi * n * t)};
}

Complex shape_direct(const NormalizedType& nt, double ratio, double t) {
  return shape_function(lissajous_point(nt.m_star, nt.n_star, ratio, t - 1.0 / 3.0),
                        lissajous_point(nt.m_star, nt.n_star, ratio, t),
                        lissajous_point(nt.m_star, nt.n_star, ratio, t + 1.0 / 3.0));
}

Complex shape_formula(const NormalizedType& nt, double ratio, double t) {
  const Complex rho = std::polar(1.0, kPi / 3.0);
  const double phase = 6.0 * kPi * static_cast<double>(nt.ell) * t;
  Complex num = 1.0 + kI * ratio * std::polar(1.0, phase);
  Complex den = 1.0 + kI * ratio * std::polar(1.0, -phase);
  return rho * std::polar(1.0, -4.0 * kPi * static_cast<double>(nt.m_star) * t) * num / den;
}

std::vector<ShapeSample> sample_curve(const NormalizedType& nt, double ratio, std::size_t steps) {
  require_odd(nt);
  const double delta = start_offset(nt);
  std::vector<ShapeSample> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    double frac = steps > 1 ? static_cast<double>(i) / static_cast<double>(steps - 1) : 0.0;
    double t = delta + frac / 3.0;
    out.push_back({t, shape_formula(nt, ratio, t)});
  }
  return out;
}

std::vector<int> epsilon_oracle(const NormalizedType& nt, const TraceConfig& config) {
  require_odd(nt);
  double ratio = config.ratio;
  std::vector<int> previous = epsilon_at(nt, ratio);
  for (int i = 0; i < config.max_halvings; ++i) {
    ratio /= 2.0;
    std::vector<int> current = epsilon_at(nt, ratio);
    if (current == previous) return current;
    previous = std::move(current);
  }
  throw Error(ErrorKind::Unstable, "epsilon oracle did not settle for " + to_string(nt.type()));
}

double collision_scan(const LissajousType& t, std::size_t steps, std::size_t candidates) {
  std::vector<std::pair<double, double>> grid;
  grid.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    double s = static_cast<double>(i) / static_cast<double>(steps);
    grid.emplace_back(pairwise_min(t, s), s);
  }
  candidates = std::min(candidates, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(candidates), grid.end());
  const double h = 1.0 / static_cast<double>(steps);
  double best = grid.front().first;
  for (std::size_t i = 0; i < candidates; ++i) {
    double s = grid[i].second;
    best = std::min(best, golden_min([&](double x) { return pairwise_min(t, x); }, s - h, s + h, 100));
  }
  return best;
}

SyzygySeq syzygy_oracle(const NormalizedType& nt, const TraceConfig& config) {
  require_odd(nt);
  double ratio = config.ratio;
  std::string previous;
  for (int i = 0; i <= config.max_halvings; ++i, ratio /= 2.0) {
    std::string current;
    try {
      current = crossings_at(nt, ratio, config);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BorderHit) throw;
      previous.clear();
      continue;
    }
    if (!previous.empty() && current == previous) {
      std::size_t first = current.find('1');
      return SyzygySeq(first == std::string::npos ? current : current.substr(first) + current.substr(0, first));
    }
    previous = std::move(current);
  }
  throw Error(ErrorKind::Unstable, "syzygy oracle did not settle for " + to_string(nt.type()));
}

SyzygyAlignment align_syzygy(const SyzygySeq& numeric, const SyzygySeq& symbolic, bool mirror) {
  SyzygyAlignment out;
  out.mirrored = mirror;
  if (numeric.size() != symbolic.size()) return out;
  const SyzygySeq source = mirror ? numeric.mirrored() : numeric;
  for (std::size_t r = 0; r < std::max<std::size_t>(source.size(), 1); ++r) {
    if (source.rotated(r) == symbolic) {
      out.matched = true;
      out.rotation = r;
      return out;
    }
  }
  return out;
}

bool expects_mirror(const NormalizedType& nt) { return nt.m_star > 0; }

Region region_of(Complex psi, double tolerance) {
  const double r = std::abs(psi);
  const double theta = wrapped_arg(psi);
  if (std::abs(r - 1.0) < tolerance || distance_to_third(theta) < tolerance) {
    throw Error(ErrorKind::OnBorder, "shape point lies on a region border");
  }
  Region out;
  out.hemisphere = r > 1.0 ? Hemisphere::negative : Hemisphere::positive;
  out.sector = static_cast<Sector>(static_cast<int>(theta / kThird) % 3);
  return out;
}

std::vector<Region> region_itinerary(const NormalizedType& nt, const TraceConfig& config) {
  std::vector<Region> out;
  for (const ShapeSample& s : sample_curve(nt, config.ratio, config.itinerary_steps)) {
    Region r;
    try {
      r = region_of(s.psi, config.region_tolerance);
    } catch (const Error&) {
      continue;
    }
    if (out.empty() || !(out.back() == r)) out.push_back(r);
  }
  return out;
}

std::vector<FareyEdge> farey_edges(std::int64_t max_denominator) {
  std::vector<Fraction> fractions;
  for (std::int64_t den = 1; den <= max_denominator; ++den) {
    for (std::int64_t num = 0; num <= den; ++num) {
      if (std::gcd(num, den) == 1) fractions.push_back({num, den});
    }
  }
  std::vector<FareyEdge> edges;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    for (std::size_t j = 0; j < fractions.size(); ++j) {
      const Fraction& x = fractions[i];
      const Fraction& y = fractions[j];
      if (x.num * y.den < y.num * x.den && y.num * x.den - x.num * y.den == 1) edges.push_back({x, y});
    }
  }
  return edges;
}

void svg_shape(const NormalizedType& nt, double ratio, std::size_t steps, const std::string& path) {
  require_odd(nt);
  const LissajousType p0 = reduce_to_p0(nt).type;
  const LevelSlope ls = level_slope_of(p0);
  std::ostringstream comment;
  comment << "type (" << nt.m_star << "," << nt.n_star << ") level " << ls.level << " slope " << ls.slope_string();

  const double scale = 450.0;
  auto to_px = [&](Complex z) {
    double r = std::abs(z);
    Complex w = r > 0 ? z / r * (r / (1.0 + r)) : z;
    return std::make_pair(500.0 + scale * w.real(), 500.0 - scale * w.imag());
  };

  std::ostringstream svg;
  svg << std::setprecision(6) << svg_header(comment.str());
  svg << "<circle cx=\"500\" cy=\"500\" r=\"" << scale / 2.0 << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k < 6; ++k) {
    Complex end = std::polar(1.0, k * kPi / 3.0);
    svg << "<line x1=\"500\" y1=\"500\" x2=\"" << 500.0 + scale * end.real() << "\" y2=\""
        << 500.0 - scale * end.imag() << "\" stroke=\"gray\""
        << (k % 2 == 0 ? "" : " stroke-dasharray=\"6,4\"") << "/>\n";
  }
  for (int k = 0; k < 3; ++k) {
    auto [x, y] = to_px(std::polar(1.0, k * kThird));
    svg << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"red\"/>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"blue\" points=\"";
  for (const ShapeSample& s : sample_curve(nt, ratio, steps)) {
    auto [x, y] = to_px(s.psi);
    svg << x << "," << y << " ";
  }
  svg << "\"/>\n</svg>\n";
  write_file(path, svg.str());
}

void svg_halfplane(const Psl2Mat& mat, std::int64_t max_denominator, const std::string& path) {
  auto [plus, minus] = fixed_points(mat);
  const double x1 = plus.approx();
  const double x2 = minus.approx();
  const double lo = std::floor(std::min(x1, x2)) - 1.0;
  const double hi = std::ceil(std::max(x1, x2)) + 1.0;
  const double sx = 1000.0 / (hi - lo);
  const double base = 900.0;
  auto px = [&](double x) { return (x - lo) * sx; };
  auto arc = [&](double a, double b) {
    std::ostringstream s;
    double r = std::abs(b - a) * sx / 2.0;
    s << "M " << px(std::min(a, b)) << " " << base << " A " << r << " " << r << " 0 0 1 " << px(std::max(a, b))
      << " " << base;
    return s.str();
  };

  std::ostringstream svg;
  svg << std::setprecision(8) << svg_header("matrix " + mat.to_string() + " max denominator " +
                                            std::to_string(max_denominator));
  svg << "<line x1=\"0\" y1=\"" << base << "\" x2=\"1000\" y2=\"" << base << "\" stroke=\"black\"/>\n";
  const std::vector<FareyEdge> edges = farey_edges(max_denominator);
  for (double k = lo; k < hi; k += 1.0) {
    svg << "<line x1=\"" << px(k) << "\" y1=\"" << base << "\" x2=\"" << px(k)
        << "\" y2=\"0\" stroke=\"gray\"/>\n";
    for (const FareyEdge& e : edges) {
      double a = k + static_cast<double>(e.left.num) / static_cast<double>(e.left.den);
      double b = k + static_cast<double>(e.right.num) / static_cast<double>(e.right.den);
      svg << "<path d=\"" << arc(a, b) << "\" fill=\"none\" stroke=\"gray\"/>\n";
    }
  }
  svg << "<path d=\"" << arc(x1, x2) << "\" fill=\"none\" stroke=\"blue\" stroke-width=\"3\"/>\n</svg>\n";
  write_file(path, svg.str());
}

void write_csv(const std::vector<ShapeSample>& samples, const std::string& path) {
  std::ostringstream out;
  out << std::setprecision(12) << "t,re_psi,im_psi\n";
  for (const ShapeSample& s : samples) out << s.t << "," << s.psi.real() << "," << s.psi.imag() << "\n";
  write_file(path, out.str());
}

}  // namespace lissajous::shape
