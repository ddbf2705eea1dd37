#include "verify.hpp"

#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lissajous/classify.hpp"
#include "lissajous/error.hpp"
#include "lissajous/shapetrace.hpp"
#include "lissajous/surd.hpp"
#include "lissajous/syzygy.hpp"

namespace lissajous::cli {

namespace {

// A case returns an empty string on success, otherwise the failure reason.
using Case = std::pair<std::string, std::function<std::string()>>;

std::string check(bool ok, const std::string& reason) { return ok ? std::string() : reason; }

std::vector<Case> epsilon_cases(std::int64_t max_m) {
  std::vector<Case> cases;
  for (const LissajousType& t : enumerate_p0(max_m)) {
    cases.emplace_back(to_string(t), [t] {
      NormalizedType nt = normalize(t);
      std::vector<int> numeric = shape::epsilon_oracle(nt);
      return check(numeric == epsilon_seq(nt).bits, "oracle bits differ from the floor formula");
    });
  }
  return cases;
}

std::vector<Case> collision_cases(std::int64_t max_m) {
  std::vector<Case> cases;
  for (std::int64_t m = -max_m; m <= max_m; ++m) {
    for (std::int64_t n = -max_m; n <= max_m; ++n) {
      if (m == 0 || n == 0 || m % 3 == 0 || n % 3 == 0 || std::gcd(m, n) != 1) continue;
      LissajousType t{m, n};
      cases.emplace_back(to_string(t), [t] {
        const shape::TraceConfig config;
        double d = shape::collision_scan(t, config.scan_steps, config.refine_candidates);
        if (is_collision_free(t)) return check(d > config.free_threshold, "predicted free but distance " + std::to_string(d));
        return check(d < config.collision_threshold, "predicted collision but distance " + std::to_string(d));
      });
    }
  }
  return cases;
}

std::vector<Case> bijection_cases(std::int64_t max_m, std::uint64_t seed) {
  std::vector<Case> cases;
  for (const LissajousType& t : enumerate_p0(max_m)) {
    cases.emplace_back(to_string(t), [t] { return check(type_of(level_slope_of(t)) == t, "type round trip failed"); });
  }
  auto label_case = [](const LevelSlope& ls) {
    return Case("label (" + std::to_string(ls.level) + "," + ls.slope_string() + ")",
                [ls] { return check(level_slope_of(type_of(ls)) == ls, "label round trip failed"); });
  };
  for (const LevelSlope& ls : enumerate_labels(10, 100)) cases.push_back(label_case(ls));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> level(1, 40);
  std::uniform_int_distribution<std::int64_t> sum(1, 400);
  for (int drawn = 0; drawn < 200;) {
    std::int64_t s = sum(rng);
    std::int64_t q = std::uniform_int_distribution<std::int64_t>(0, s - 1)(rng);
    LevelSlope ls{level(rng), s - q, q};
    if (!ls.valid()) continue;
    cases.push_back(label_case(ls));
    ++drawn;
  }
  return cases;
}

std::vector<Case> cf_cases(std::int64_t max_m) {
  std::vector<Case> cases;
  for (const LissajousType& t : enumerate_p0(max_m)) {
    cases.emplace_back(to_string(t), [t] {
      Psl2Mat w = frieze_to_matrix(ab_to_frieze(build_W(normalize(t))));
      CfExpansion cf = cf_expand(far_endpoint(w));
      for (const Integer& a : cf.period) {
        if (a % 2 == 0) return std::string("even partial quotient in the period");
      }
      return check(matches_cluster_period(cf, cluster_radii(level_slope_of(t))), "period differs from (2r-1)");
    });
  }
  return cases;
}

std::vector<Case> cluster_cases(std::int64_t max_m) {
  std::vector<Case> cases;
  for (const LissajousType& t : enumerate_p0(max_m)) {
    cases.emplace_back(to_string(t), [t] {
      NormalizedType nt = normalize(t);
      FriezeWord h = build_H(nt);
      if (clusters_of(level_slope_of(t)).letters != h) return std::string("cluster word differs from H");
      Psl2Mat w = ab_to_matrix(build_W(nt));
      if (w != frieze_to_matrix(h * second_half(h))) return std::string("W differs from H * second half");
      const Psl2Mat a = Psl2Mat::gen_A();
      return check(w == a * w.inverse() * a, "W is not A-symmetric");
    });
  }
  return cases;
}

std::vector<Case> syzygy_cases(std::int64_t max_m) {
  std::vector<Case> cases;
  for (const LissajousType& t : enumerate_p0(max_m)) {
    cases.emplace_back(to_string(t), [t] {
      NormalizedType nt = normalize(t);
      SyzygySeq symbolic = syzygy_sequence(t, 1);
      if (!is_reduced(symbolic)) return std::string("symbolic sequence not reduced");
      SyzygySeq numeric = shape::syzygy_oracle(nt);
      shape::SyzygyAlignment a = shape::align_syzygy(numeric, symbolic, shape::expects_mirror(nt));
      return check(a.matched, "numeric " + numeric.str() + " vs symbolic " + symbolic.str());
    });
  }
  return cases;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"epsilon", "collision", "bijection", "cf", "cluster", "syzygy"};
  return names;
}

VerifySummary run_verify(const VerifyOptions& options, std::ostream& out) {
  auto bound = [&](std::int64_t fallback) { return options.max_m > 0 ? options.max_m : fallback; };
  std::vector<Case> cases;
  if (options.suite == "epsilon") {
    cases = epsilon_cases(bound(30));
  } else if (options.suite == "collision") {
    cases = collision_cases(bound(10));
  } else if (options.suite == "bijection") {
    cases = bijection_cases(bound(200), options.seed);
  } else if (options.suite == "cf") {
    cases = cf_cases(bound(60));
  } else if (options.suite == "cluster") {
    cases = cluster_cases(bound(200));
  } else if (options.suite == "syzygy") {
    cases = syzygy_cases(bound(12));
  } else {
    throw std::invalid_argument("unknown suite: " + options.suite);
  }

  VerifySummary summary;
  for (const auto& [name, run] : cases) {
    std::string reason;
    try {
      reason = run();
    } catch (const std::exception& e) {
      reason = e.what();
    }
    ++summary.cases;
    if (!reason.empty()) {
      ++summary.failures;
      out << "FAIL " << name << ": " << reason << "\n";
    } else if (!options.quiet) {
      out << "PASS " << name << "\n";
    }
  }
  if (summary.failures == 0) {
    out << "all " << summary.cases << " cases pass\n";
  } else {
    out << summary.failures << " of " << summary.cases << " cases failed\n";
  }
  return summary;
}

}  // namespace lissajous::cli
