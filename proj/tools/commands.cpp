#include "commands.hpp"

#include <charconv>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lissajous/classify.hpp"
#include "lissajous/error.hpp"
#include "lissajous/shapetrace.hpp"
#include "lissajous/surd.hpp"
#include "lissajous/syzygy.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace lissajous::cli {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

struct Flags {
  std::string type;
  bool text = false;
  bool json = false;
  std::int64_t level = 0;
  std::string slope;
  std::int64_t periods = 1;
  bool group = false;
  std::string kind;
  std::string out_path;
  std::string csv_path;
  std::size_t steps = 4000;
  double ratio = 0.05;
  std::int64_t max_den = 4;
  std::int64_t max_m = 0;
  std::int64_t max_sum = 0;
  std::int64_t max_level = 1;
  std::string suite;
  std::uint64_t seed = 0;
  bool quiet = false;
};

int emit_report(const Report& r, const Flags& f, std::ostream& out) {
  if (f.text && !f.json) {
    out << to_text(r);
  } else {
    out << to_json(r).dump(2) << "\n";
  }
  return r.collision_free ? kOk : kCollision;
}

LissajousType primitive_of(const LissajousType& t) { return reduce_to_p0(normalize(t)).type; }

int cmd_classify(const Flags& f, std::ostream& out) { return emit_report(build_report(parse_type(f.type)), f, out); }

int cmd_from_label(const Flags& f, std::ostream& out) {
  Slope s = parse_slope(f.slope);
  return emit_report(build_report(type_of(LevelSlope{f.level, s.p, s.q})), f, out);
}

int cmd_cf(const Flags& f, std::ostream& out) {
  NormalizedType nt = normalize(parse_type(f.type));
  Psl2Mat w = ab_to_matrix(build_W(nt));
  QuadSurd x = far_endpoint(w);
  CfExpansion cf = cf_expand(x);
  if (f.json) {
    nlohmann::ordered_json j = {{"far_endpoint", x.to_string()}, {"approx", x.approx()}};
    j["cf"] = cf_json(cf);
    out << j.dump() << "\n";
    return kOk;
  }
  auto list = [](const std::vector<Integer>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
    return s + "]";
  };
  out << x.to_string() << "\n";
  out << "preperiod " << list(cf.preperiod) << "\n";
  out << "period " << list(cf.period) << "\n";
  return kOk;
}

int cmd_syzygy(const Flags& f, std::ostream& out) {
  LissajousType t = primitive_of(parse_type(f.type));
  LevelSlope ls = level_slope_of(t);
  SignWord w = omega(ls);
  SyzygySeq s = syzygy_sequence(t, f.periods);
  std::string shown = f.group ? s.grouped(w.size()) : s.str();
  if (f.json) {
    out << nlohmann::ordered_json{{"p0", {{"m", t.m}, {"n", t.n}}}, {"omega", w.str()}, {"syzygy", shown}}.dump()
        << "\n";
  } else {
    out << shown << "\n";
  }
  return kOk;
}

int cmd_plot(const Flags& f, std::ostream& out) {
  NormalizedType nt = normalize(parse_type(f.type));
  if (f.kind == "shape") {
    shape::svg_shape(nt, f.ratio, f.steps, f.out_path);
    if (!f.csv_path.empty()) shape::write_csv(shape::sample_curve(nt, f.ratio, f.steps), f.csv_path);
  } else {
    shape::svg_halfplane(ab_to_matrix(build_W(nt)), f.max_den, f.out_path);
  }
  out << "wrote " << f.out_path << "\n";
  return kOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.max_m > 0) {
    for (const LissajousType& t : enumerate_p0(f.max_m)) {
      LevelSlope ls = level_slope_of(t);
      out << nlohmann::ordered_json{{"m", t.m}, {"n", t.n}, {"level", ls.level}, {"slope", ls.slope_string()}}.dump()
          << "\n";
    }
    return kOk;
  }
  if (f.max_sum > 0) {
    for (const LevelSlope& ls : enumerate_labels(f.max_level, f.max_sum)) {
      LissajousType t = type_of(ls);
      out << nlohmann::ordered_json{{"level", ls.level}, {"slope", ls.slope_string()}, {"m", t.m}, {"n", t.n}}.dump()
          << "\n";
    }
    return kOk;
  }
  err << "enumerate needs --max-m or --max-sum\n";
  return kUsage;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  VerifySummary s = run_verify({f.suite, f.max_m, f.seed, f.quiet}, out);
  return s.failures == 0 ? kOk : kVerifyFailed;
}

void add_format_flags(CLI::App* sub, Flags& f) {
  sub->add_flag("--json", f.json, "Machine-readable JSON output (default)");
  sub->add_flag("--text", f.text, "Plain key: value output");
}

}  // namespace

LissajousType parse_type(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorKind::ParseError, "type must be written m,n");
  return {parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1))};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classifier for Lissajous 3-braids"};
  app.require_subcommand(1);
  Flags f;

  auto* classify = app.add_subcommand("classify", "Full report for a Lissajous type");
  classify->add_option("--type", f.type, "Type as m,n")->required();
  add_format_flags(classify, f);

  auto* from_label = app.add_subcommand("from-label", "Report for a level/slope label");
  from_label->add_option("--level", f.level, "Level N >= 1")->required();
  from_label->add_option("--slope", f.slope, "Slope as q/p")->required();
  add_format_flags(from_label, f);

  auto* cf = app.add_subcommand("cf", "Far endpoint of W and its continued fraction");
  cf->add_option("--type", f.type, "Type as m,n")->required();
  cf->add_flag("--json", f.json, "JSON output");

  auto* syzygy = app.add_subcommand("syzygy", "Syzygy sequence of the class of a type");
  syzygy->add_option("--type", f.type, "Type as m,n")->required();
  syzygy->add_option("--periods", f.periods, "Number of periods")->check(CLI::PositiveNumber);
  syzygy->add_flag("--group", f.group, "Dot-separate blocks of |Omega| letters");
  syzygy->add_flag("--json", f.json, "JSON output");

  auto* plot = app.add_subcommand("plot", "Write an SVG of the shape curve or the half-plane lift");
  plot->add_option("--kind", f.kind, "shape or halfplane")->required()->check(CLI::IsMember({"shape", "halfplane"}));
  plot->add_option("--type", f.type, "Type as m,n")->required();
  plot->add_option("--out", f.out_path, "SVG output path")->required();
  plot->add_option("--csv", f.csv_path, "Also write the samples as CSV (shape only)");
  plot->add_option("--steps", f.steps, "Number of samples")->check(CLI::PositiveNumber);
  plot->add_option("--ratio", f.ratio, "Amplitude ratio B/A")->check(CLI::Range(1e-9, 0.999));
  plot->add_option("--max-den", f.max_den, "Largest Farey denominator")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "Stream primitive types or labels as JSON lines");
  enumerate->add_option("--max-m", f.max_m, "Bound on |m|");
  enumerate->add_option("--max-sum", f.max_sum, "Bound on p+q");
  enumerate->add_option("--max-level", f.max_level, "Bound on the level when enumerating labels");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--suite", f.suite, "Suite name")->required()->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--max-m", f.max_m, "Bound on |m| (suite default if omitted)");
  verify->add_option("--seed", f.seed, "Seed for randomized cases");
  verify->add_flag("--quiet", f.quiet, "Only print failures and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(f, out);
    if (*from_label) return cmd_from_label(f, out);
    if (*cf) return cmd_cf(f, out);
    if (*syzygy) return cmd_syzygy(f, out);
    if (*plot) return cmd_plot(f, out);
    if (*enumerate) return cmd_enumerate(f, out, err);
    if (*verify) return cmd_verify(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lissajous::cli
