#include <cmath>
#include <random>
#include <sstream>

#include "tripleline/cli/commands.hpp"
#include "tripleline/cli/serialize.hpp"
#include "tripleline/diagram/census.hpp"
#include "tripleline/diagram/loops.hpp"
#include "tripleline/errors.hpp"
#include "tripleline/gaussian/oracle.hpp"
#include "tripleline/gaussian/transforms.hpp"
#include "tripleline/series/flp.hpp"

namespace tripleline::cli {

namespace {

using gaussian::Dims;
using gaussian::EntrySymbol;
using gaussian::Family;

constexpr double kMomentTolerance = 1e-8;

struct SuiteReport {
  std::string suite;
  std::uint64_t checks = 0;
  ordered_json failures = ordered_json::array();
  ordered_json records = ordered_json::array();
  std::vector<std::string> notes;

  void check(bool ok, const std::string& name, const std::string& inputs, const std::string& detail) {
    ++checks;
    if (ok) return;
    ordered_json f;
    f["check"] = name;
    f["inputs"] = inputs;
    f["detail"] = detail;
    failures.push_back(std::move(f));
  }
  void record(const std::string& op, const std::string& inputs, double eps, std::complex<double> v) {
    records.push_back(oracle_json({op, inputs, eps, v}));
  }
};

std::vector<EntrySymbol> all_entries(Dims dims) {
  std::vector<EntrySymbol> out;
  for (const Family f : {Family::A, Family::B}) {
    for (int mu = 1; mu <= dims.d; ++mu) {
      for (int r = 1; r <= dims.N; ++r) {
        for (int c = 1; c <= dims.N; ++c) out.push_back({f, mu, r, c});
      }
    }
  }
  return out;
}

std::string describe(std::span<const EntrySymbol> entries) {
  std::string s;
  for (const auto& e : entries) {
    if (!s.empty()) s += ' ';
    s += e.to_string();
  }
  return s;
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

/// Visits every multiset of `size` elements drawn from `pool` (non-decreasing index tuples).
template <class Visit>
void for_each_multiset(const std::vector<EntrySymbol>& pool, int size, Visit visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(size), 0);
  std::vector<EntrySymbol> chosen(static_cast<std::size_t>(size));
  for (;;) {
    for (int i = 0; i < size; ++i) chosen[static_cast<std::size_t>(i)] = pool[idx[static_cast<std::size_t>(i)]];
    visit(std::span<const EntrySymbol>(chosen));
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] + 1 == pool.size()) --i;
    if (i < 0) return;
    const std::size_t v = idx[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < size; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

gaussian::ActionSpec quadratic_part(series::SeriesAction a) {
  return a == series::SeriesAction::Symmetric ? gaussian::ActionSpec::Symmetric : gaussian::ActionSpec::Standard;
}

void require_oracle_size(const RunConfig& cfg) {
  if (cfg.N > 3 || cfg.d > 2) throw ResourceLimitError("oracle suites support N <= 3 and d <= 2");
}

SuiteReport suite_wick(const RunConfig& cfg) {
  require_oracle_size(cfg);
  SuiteReport rep;
  const Dims dims = Dims::make(cfg.N, cfg.d);
  const auto action = quadratic_part(cfg.action);
  const auto props = gaussian::general_propagators(action);
  gaussian::ExtrapolationOptions opts;
  opts.first = cfg.eps;
  const gaussian::OracleLadder ladder(dims, action, opts);
  const auto pool = all_entries(dims);
  std::vector<int> degrees{2, 4};
  if (pool.size() <= 18) {
    degrees.push_back(6);
  } else {
    rep.notes.push_back("degree-6 moments skipped: more than 18 distinct entries");
  }
  for (const int degree : degrees) {
    for_each_multiset(pool, degree, [&](std::span<const EntrySymbol> entries) {
      const auto exact = gaussian::wick_moment_detailed(entries, dims, props);
      const auto oracle = ladder.moment(entries);
      const double err = std::abs(exact.value.to_complex() - oracle.value);
      const std::string inputs = describe(entries);
      rep.check(exact.pairings == gaussian::pairing_count(static_cast<unsigned>(degree)), "pairing_count", inputs,
                "visited " + std::to_string(exact.pairings));
      rep.check(err < kMomentTolerance, "wick_vs_oracle", inputs,
                "exact " + exact.value.to_string() + ", oracle " + format_complex(oracle.value));
      if (degree == 2 || err >= kMomentTolerance) rep.record("wick_moment", inputs, 0.0, oracle.value);
    });
  }
  return rep;
}

SuiteReport suite_propagators(const RunConfig& cfg) {
  require_oracle_size(cfg);
  SuiteReport rep;
  const Dims dims = Dims::make(cfg.N, cfg.d);
  const auto action = quadratic_part(cfg.action);
  const auto props = gaussian::general_propagators(action);
  rep.check(gaussian::general_propagators(gaussian::ActionSpec::Standard) == gaussian::PropagatorMatrix::standard(),
            "standard_blocks", "", "general_propagators(standard) differs from the fixed blocks");
  gaussian::ExtrapolationOptions opts;
  opts.first = cfg.eps;
  const gaussian::OracleLadder ladder(dims, action, opts);
  const auto pool = all_entries(dims);
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a; b < pool.size(); ++b) {
      const std::array<EntrySymbol, 2> pair{pool[a], pool[b]};
      const GaussRational exact = gaussian::propagator(pair[0], pair[1], dims, props);
      const auto oracle = ladder.moment(pair);
      const std::string inputs = describe(pair);
      rep.check(std::abs(exact.to_complex() - oracle.value) < kMomentTolerance, "propagator_vs_oracle", inputs,
                "exact " + exact.to_string() + ", oracle " + format_complex(oracle.value));
      rep.check(exact == gaussian::propagator(pair[1], pair[0], dims, props), "propagator_symmetry", inputs, "");
      rep.record("propagator", inputs, 0.0, oracle.value);
    }
  }
  return rep;
}

SuiteReport suite_euler(const RunConfig& cfg) {
  SuiteReport rep;
  for (int k = 1; k <= cfg.kmax; ++k) {
    const std::string inputs = "k=" + std::to_string(k);
    diagram::CensusOptions options;
    options.threads = cfg.threads;
    options.max_k = cfg.cap;
    try {
      const auto census = diagram::run_census(k, options);
      rep.check(census.pairings == diagram::expected_matchings(k, diagram::MatchMode::AbOnly), "matching_count",
                inputs, "enumerated " + std::to_string(census.pairings));
      std::uint64_t parity_failures = 0;
      const auto layout = diagram::VertexLayout::quartic(k);
      for (const auto& [key, count] : census.histogram) {
        if (key.components == 1 && (key.C - layout.vertex_count()) % 2 != 0) parity_failures += count;
      }
      rep.check(parity_failures == 0, "parity", inputs, std::to_string(parity_failures) + " pairings with C - V odd");
      rep.notes.push_back(inputs + ": " + std::to_string(census.pairings) + " pairings, max genus " +
                          std::to_string(census.max_genus));
    } catch (const InvariantViolation& e) {
      rep.check(false, "genus_integrality", inputs, e.what());
    }
  }
  return rep;
}

SuiteReport suite_logcheck(const RunConfig& cfg) {
  SuiteReport rep;
  const std::string inputs = "kmax=" + std::to_string(cfg.kmax) + " convention=" +
                             std::string(series::to_string(cfg.convention)) + " action=" +
                             std::string(series::to_string(cfg.action));
  const series::DiagramSums sums(cfg.kmax, cfg.assemble_options());
  const auto z = sums.z();
  const auto ln_z = series::formal_log(z);
  rep.check(ln_z == sums.connected(), "linked_cluster", inputs, "formal_log(Z) differs from the connected series");
  rep.check(series::formal_exp(ln_z) == z, "exp_log_round_trip", inputs, "exp(log Z) differs from Z");
  try {
    const auto table = series::extract_Flp(ln_z);
    rep.check(table.to_series() == ln_z, "lattice_reconstruction", inputs, "F_{l,p} table does not rebuild ln Z");
    const auto limit = series::double_limit(series::full_log_series(ln_z), cfg.kmax);
    rep.check(limit.ok, "double_limit", inputs,
              "limit " + limit.limit.to_string() + " vs F(g) " + limit.expected.to_string());
    rep.notes.push_back("F(g) = " + limit.limit.to_string());
  } catch (const StructuralViolation& e) {
    rep.check(false, "lattice", inputs, e.what());
  }
  return rep;
}

SuiteReport suite_bound(const RunConfig& cfg) {
  if (cfg.eps > 0.5) throw ValidationError("verify bound requires --eps <= 0.5");
  SuiteReport rep;
  const Dims dims = Dims::make(cfg.N, cfg.d);
  const gaussian::RegKernel kernel(cfg.eps);
  std::vector<std::complex<double>> zs;
  for (int re = -6; re <= 6; ++re) {
    for (int im = -6; im <= 6; ++im) {
      const std::complex<double> z(re * 0.5, im * 0.5);
      if (std::abs(z) <= 3.0) zs.push_back(z);
    }
  }
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 3; ++trial) {
    const auto fg = gaussian::MatrixPair::random(dims, rng);
    const std::string inputs = "N=" + std::to_string(cfg.N) + " d=" + std::to_string(cfg.d) +
                               " trial=" + std::to_string(trial);
    rep.check(gaussian::u_bound_check(fg, zs, kernel), "bound_holds", inputs, "bound violated on the |z| <= 3 grid");
    rep.check(!gaussian::u_bound_check(fg, zs, kernel, 10.0), "negative_control", inputs,
              "inflated left side was not detected");
  }
  return rep;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  SuiteReport rep;
  if (cfg.suite == "wick") {
    rep = suite_wick(cfg);
  } else if (cfg.suite == "propagators") {
    rep = suite_propagators(cfg);
  } else if (cfg.suite == "euler") {
    rep = suite_euler(cfg);
  } else if (cfg.suite == "logcheck") {
    rep = suite_logcheck(cfg);
  } else if (cfg.suite == "bound") {
    rep = suite_bound(cfg);
  } else {
    throw ValidationError("unknown verify suite '" + cfg.suite + "'");
  }
  rep.suite = cfg.suite;
  const bool passed = rep.failures.empty();

  CommandResult result;
  result.exit_code = passed ? kExitOk : kExitVerificationFailed;
  if (cfg.format == Format::Json) {
    ordered_json doc;
    doc["suite"] = rep.suite;
    doc["passed"] = passed;
    doc["checks"] = rep.checks;
    doc["failures"] = rep.failures;
    doc["notes"] = rep.notes;
    doc["records"] = rep.records;
    result.document = doc.dump(2) + "\n";
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& f : rep.failures) {
      ordered_json r = f;
      r["kind"] = "failure";
      rows.push_back(std::move(r));
    }
    for (const auto& rec : rep.records) {
      ordered_json r = rec;
      r["kind"] = "record";
      rows.push_back(std::move(r));
    }
    result.document =
        json_rows_to_csv(rows, {"kind", "check", "op", "inputs", "epsilon", "value_re", "value_im", "detail"});
  }
  std::ostringstream summary;
  summary << "verify " << rep.suite << ": " << (passed ? "PASS" : "FAIL") << " (" << rep.checks << " checks, "
          << rep.failures.size() << " failures)\n";
  for (const auto& n : rep.notes) summary << "  " << n << "\n";
  std::size_t shown = 0;
  for (const auto& f : rep.failures) {
    if (++shown > 20) {
      summary << "  ... " << rep.failures.size() - 20 << " more failures\n";
      break;
    }
    summary << "  FAILED " << f["check"].get<std::string>() << " [" << f["inputs"].get<std::string>() << "] "
            << f["detail"].get<std::string>() << "\n";
  }
  result.summary = summary.str();
  return result;
}

}  // namespace tripleline::cli
