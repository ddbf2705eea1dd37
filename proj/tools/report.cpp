#include "report.hpp"

#include <sstream>

#include "lissajous/surd.hpp"

namespace lissajous::cli {

namespace {

std::string join(const std::vector<Integer>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s + "]";
}

// Same digits as the JSON serializer prints for the value.
std::string real_text(double x) { return nlohmann::ordered_json(x).dump(); }

}  // namespace

nlohmann::ordered_json integer_json(const Integer& x) {
  if (auto v = to_int64(x)) return *v;
  return x.str();
}

nlohmann::ordered_json cf_json(const CfExpansion& cf) {
  nlohmann::ordered_json pre = nlohmann::ordered_json::array();
  nlohmann::ordered_json per = nlohmann::ordered_json::array();
  for (const Integer& a : cf.preperiod) pre.push_back(integer_json(a));
  for (const Integer& a : cf.period) per.push_back(integer_json(a));
  return {{"preperiod", pre}, {"period", per}};
}

Report build_report(const LissajousType& t) {
  Report r;
  r.input = t;
  r.normalized = normalize(t);
  r.collision_free = r.normalized.ell % 2 != 0;
  if (!r.collision_free) return r;

  ClassDetails d;
  d.p0 = reduce_to_p0(r.normalized).type;
  d.label = level_slope_of(d.p0);
  d.frieze_h = build_H(r.normalized);
  d.frieze_w = ab_to_frieze(build_W(r.normalized));
  d.matrix = frieze_to_matrix(d.frieze_w);
  d.dilatation = dilatation(d.matrix);
  d.far_endpoint = far_endpoint(d.matrix);
  d.cf = cf_expand(d.far_endpoint);
  d.syzygy = syzygy_sequence(d.p0, 1);
  r.details = std::move(d);
  return r;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["input"] = {{"m", r.input.m}, {"n", r.input.n}};
  j["normalized"] = {{"m", r.normalized.m_star}, {"n", r.normalized.n_star}, {"ell", r.normalized.ell}};
  j["collision_free"] = r.collision_free;
  if (!r.details) return j;
  const ClassDetails& d = *r.details;
  j["p0"] = {{"m", d.p0.m}, {"n", d.p0.n}};
  j["level"] = d.label.level;
  j["slope"] = d.label.slope_string();
  j["friezeH"] = d.frieze_h.to_string();
  j["friezeW"] = d.frieze_w.to_string();
  j["matrix"] = {{integer_json(d.matrix.a()), integer_json(d.matrix.b())},
                 {integer_json(d.matrix.c()), integer_json(d.matrix.d())}};
  j["trace"] = integer_json(d.matrix.trace());
  j["dilatation"] = {{"exact", d.dilatation.to_string()}, {"approx", d.dilatation.approx()}};
  j["far_endpoint"] = {{"exact", d.far_endpoint.to_string()}, {"approx", d.far_endpoint.approx()}};
  j["cf"] = cf_json(d.cf);
  j["syzygy"] = d.syzygy.str();
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "input: " << to_string(r.input) << "\n";
  out << "normalized: " << to_string(r.normalized.type()) << " ell=" << r.normalized.ell << "\n";
  out << "collision_free: " << (r.collision_free ? "true" : "false") << "\n";
  if (!r.details) return out.str();
  const ClassDetails& d = *r.details;
  out << "p0: " << to_string(d.p0) << "\n";
  out << "level: " << d.label.level << "\n";
  out << "slope: " << d.label.slope_string() << "\n";
  out << "friezeH: " << d.frieze_h.to_string() << "\n";
  out << "friezeW: " << d.frieze_w.to_string() << "\n";
  out << "matrix: " << d.matrix.to_string() << "\n";
  out << "trace: " << d.matrix.trace() << "\n";
  out << "dilatation: " << d.dilatation.to_string() << " ~ " << real_text(d.dilatation.approx()) << "\n";
  out << "far_endpoint: " << d.far_endpoint.to_string() << " ~ " << real_text(d.far_endpoint.approx()) << "\n";
  out << "cf: preperiod " << join(d.cf.preperiod) << " period " << join(d.cf.period) << "\n";
  out << "syzygy: " << d.syzygy.str() << "\n";
  return out.str();
}

}  // namespace lissajous::cli
