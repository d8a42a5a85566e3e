#include "tripleline/cli/commands.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "tripleline/cli/serialize.hpp"
#include "tripleline/diagram/census.hpp"
#include "tripleline/diagram/loops.hpp"
#include "tripleline/errors.hpp"
#include "tripleline/knot/export.hpp"
#include "tripleline/series/flp.hpp"

namespace tripleline::cli {

namespace {

constexpr const char* kConventionNote =
    "action: each vertex carries i g / (2N) as in the action; paper_series: each vertex carries i g / N as in the "
    "printed perturbation series. Order-k coefficients differ by 2^k.";

ordered_json expand_csv_rows(const series::TriSeries& z, const series::TriSeries& ln_z, const series::FlpTable& t,
                             const series::GeneratingFunction& f) {
  ordered_json rows = ordered_json::array();
  auto add_series = [&rows](const char* section, const series::TriSeries& s) {
    for (const auto& [key, c] : s.terms()) {
      ordered_json r;
      r["section"] = section;
      r["k"] = key.k;
      r["n_pow"] = key.n_pow;
      r["d_pow"] = key.d_pow;
      r.update(rational_parts(c));
      rows.push_back(std::move(r));
    }
  };
  add_series("z", z);
  add_series("ln_z", ln_z);
  for (const auto& [lp, poly] : t.entries) {
    for (const auto& [k, c] : poly) {
      ordered_json r;
      r["section"] = "flp";
      r["k"] = k;
      r["l"] = lp.l;
      r["p"] = lp.p;
      r.update(rational_parts(c));
      rows.push_back(std::move(r));
    }
  }
  ordered_json lnpi;
  lnpi["section"] = "F_lnpi";
  lnpi["k"] = 0;
  lnpi.update(rational_parts(GaussRational(f.lnpi_coeff)));
  rows.push_back(std::move(lnpi));
  for (const auto& [k, c] : f.polynomial) {
    ordered_json r;
    r["section"] = "F";
    r["k"] = k;
    r.update(rational_parts(c));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

CommandResult cmd_expand(const RunConfig& cfg) {
  cfg.validate();
  const series::DiagramSums sums(cfg.kmax, cfg.assemble_options());
  const auto z = sums.z();
  const auto ln_z = series::formal_log(z);
  const auto table = series::extract_Flp(ln_z);
  const auto full = series::full_log_series(ln_z);
  const auto limit = series::double_limit(full, cfg.kmax);
  const auto F = series::F_of_g(table);
  const auto counts = sums.planar_single_loop_counts();
  const bool linked = ln_z == sums.connected();

  CommandResult result;
  result.exit_code = limit.ok && linked ? kExitOk : kExitVerificationFailed;
  if (cfg.format == Format::Json) {
    ordered_json doc;
    doc["command"] = "expand";
    doc["convention"] = std::string(series::to_string(cfg.convention));
    doc["convention_note"] = kConventionNote;
    doc["action"] = std::string(series::to_string(cfg.action));
    doc["kmax"] = cfg.kmax;
    doc["z_series"] = series_json(z, cfg.convention);
    doc["ln_z_series"] = series_json(ln_z, cfg.convention);
    ordered_json constant;
    constant["ln2"] = {{"coeff", 1}, {"n_pow", full.ln2_n}, {"d_pow", full.ln2_d}};
    constant["lnpi"] = {{"coeff", 1}, {"n_pow", full.lnpi_n}, {"d_pow", full.lnpi_d}};
    constant["printed_ln2_term"] = "N ln 2";
    doc["free_constant"] = std::move(constant);
    doc["flp_table"] = flp_json(table);
    doc["F_of_g"] = generating_function_json(F);
    doc["double_limit_ok"] = limit.ok;
    doc["linked_cluster_ok"] = linked;
    doc["planar_single_loop_counts"] = counts;
    result.document = doc.dump(2) + "\n";
  } else {
    result.document = json_rows_to_csv(expand_csv_rows(z, ln_z, table, F),
                                       {"section", "k", "n_pow", "d_pow", "l", "p", "re_num", "re_den", "im_num",
                                        "im_den"});
  }
  std::ostringstream s;
  s << "expand kmax=" << cfg.kmax << " convention=" << series::to_string(cfg.convention)
    << " action=" << series::to_string(cfg.action) << "\n";
  s << "  ln Z = dN ln 2 + dN^2 ln π";
  if (!ln_z.empty()) s << " + " << ln_z.to_string();
  s << "\n";
  s << "  F(g) = " << F.to_string() << "\n";
  s << "  planar single-loop pairings per order:";
  for (const auto c : counts) s << ' ' << c;
  s << "\n";
  s << "  linked cluster: " << (linked ? "ok" : "MISMATCH") << ", double limit: " << (limit.ok ? "ok" : "MISMATCH")
    << "\n";
  result.summary = s.str();
  return result;
}

CommandResult cmd_knots(const RunConfig& cfg) {
  cfg.validate();
  knot::KnotOptions options;
  options.convention = cfg.convention;
  options.action = cfg.action;
  options.threads = cfg.threads;
  options.max_k = cfg.cap;

  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  s << "knots kmax=" << cfg.kmax << " convention=" << series::to_string(cfg.convention)
    << " action=" << series::to_string(cfg.action) << "\n";
  for (int k = 1; k <= cfg.kmax; ++k) {
    const auto diagrams = knot::enumerate_knot_diagrams(k, options);
    std::map<std::string, std::size_t> codes;
    std::set<std::string> reduced;
    GaussRational sum;
    for (const auto& d : diagrams) {
      rows.push_back(knot_json(d));
      ++codes[d.code.to_string()];
      reduced.insert(d.reduced_code.to_string());
      sum += d.coefficient;
    }
    s << "  k=" << k << ": " << diagrams.size() << " diagrams, " << codes.size() << " distinct codes, "
      << reduced.size() << " distinct reduced codes, coefficient sum " << sum.to_string() << "\n";
  }
  CommandResult result;
  if (cfg.format == Format::Json) {
    for (const auto& r : rows) result.document += r.dump() + "\n";
  } else {
    result.document = json_rows_to_csv(rows, {"k", "code", "coeff_re", "coeff_im", "reduced_code"});
  }
  result.summary = s.str();
  return result;
}

CommandResult cmd_diagrams(const RunConfig& cfg) {
  cfg.validate();
  const auto mode = series::action_match_mode(cfg.action);
  ordered_json rows = ordered_json::array();
  std::ostringstream s;
  for (int k = 1; k <= cfg.kmax; ++k) {
    const auto layout = diagram::VertexLayout::quartic(k);
    auto parts = diagram::partitioned_fold<ordered_json>(
        layout, mode, cfg.threads, [] { return ordered_json::array(); },
        [&layout](ordered_json& acc, const diagram::Pairing& p) {
          acc.push_back(diagram_json(p, diagram::components_and_genus(layout, p), diagram::is_tadpole(layout, p)));
        });
    std::size_t n = 0;
    for (auto& part : parts) {
      for (auto& r : part) {
        rows.push_back(std::move(r));
        ++n;
      }
    }
    s << "  k=" << k << ": " << n << " pairings (" << diagram::to_string(mode) << ")\n";
  }
  CommandResult result;
  if (cfg.format == Format::Json) {
    for (const auto& r : rows) result.document += r.dump() + "\n";
  } else {
    result.document = json_rows_to_csv(rows, {"k", "match", "C", "l", "components", "genus", "tadpole"});
  }
  result.summary = "diagrams kmax=" + std::to_string(cfg.kmax) + "\n" + s.str();
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string convention = "action";
  std::string action = "standard";
  std::string format = "json";

  CLI::App app{"Exact perturbative expansion of the two-family quartic matrix model", "tripleline"};
  app.set_config("--config", "", "File of key=value lines; command-line flags take precedence");
  app.add_option("--kmax", cfg.kmax, "Highest order in g")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Enumeration cap on kmax (at most 6)")->capture_default_str();
  app.add_option("--N", cfg.N, "Matrix size for oracle suites")->capture_default_str();
  app.add_option("--d", cfg.d, "Number of Greek components for oracle suites")->capture_default_str();
  app.add_option("--eps", cfg.eps, "First epsilon of the extrapolation sequence; epsilon of the bound check")
      ->capture_default_str();
  app.add_option("--convention", convention, "Vertex coupling convention")
      ->check(CLI::IsMember({"action", "paper_series"}))
      ->capture_default_str();
  app.add_option("--action", action, "Action variant")
      ->check(CLI::IsMember({"standard", "symmetric", "wick_ordered"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads for enumeration")->capture_default_str();
  app.add_option("--out", cfg.out, "Output path, or - for stdout")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "Z and ln Z series, the F_{l,p} table and F(g)")->fallthrough();
  auto* verify = app.add_subcommand("verify", "Run an invariant suite")->fallthrough();
  verify->add_option("suite", cfg.suite, "wick | euler | logcheck | bound | propagators")
      ->required()
      ->check(CLI::IsMember({"wick", "euler", "logcheck", "bound", "propagators"}));
  auto* knots = app.add_subcommand("knots", "Gauss codes of planar single-loop diagrams")->fallthrough();
  auto* diagrams = app.add_subcommand("diagrams", "Every pairing with its loop report")->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.convention = series::parse_convention(convention);
    cfg.action = series::parse_series_action(action);
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    CommandResult result;
    if (expand->parsed()) {
      cfg.command = "expand";
      result = cmd_expand(cfg);
    } else if (verify->parsed()) {
      cfg.command = "verify";
      result = cmd_verify(cfg);
    } else if (knots->parsed()) {
      cfg.command = "knots";
      result = cmd_knots(cfg);
    } else if (diagrams->parsed()) {
      cfg.command = "diagrams";
      result = cmd_diagrams(cfg);
    }
    if (cfg.out == "-") {
      out << result.document;
      err << result.summary;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open output file " << cfg.out << "\n";
        return kExitUsage;
      }
      file << result.document;
      if (!file) {
        err << "error: failed writing " << cfg.out << "\n";
        return kExitUsage;
      }
      out << result.summary;
    }
    return result.exit_code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace tripleline::cli
