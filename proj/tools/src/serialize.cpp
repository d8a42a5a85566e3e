#include "tripleline/cli/serialize.hpp"

#include <sstream>

namespace tripleline::cli {

ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json rational_parts(const GaussRational& c) {
  ordered_json j;
  j["re_num"] = integer_json(c.re().get_num());
  j["re_den"] = integer_json(c.re().get_den());
  j["im_num"] = integer_json(c.im().get_num());
  j["im_den"] = integer_json(c.im().get_den());
  return j;
}

ordered_json series_json(const series::TriSeries& s, series::Convention convention) {
  ordered_json j;
  j["convention"] = std::string(series::to_string(convention));
  j["kmax"] = s.kmax();
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : s.terms()) {
    ordered_json t;
    t["k"] = key.k;
    t["n_pow"] = key.n_pow;
    t["d_pow"] = key.d_pow;
    t.update(rational_parts(c));
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

namespace {

ordered_json polynomial_json(const series::GPolynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : p) {
    ordered_json t;
    t["k"] = k;
    t.update(rational_parts(c));
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

ordered_json flp_json(const series::FlpTable& t) {
  ordered_json out = ordered_json::array();
  for (const auto& [lp, poly] : t.entries) {
    ordered_json e;
    e["l"] = lp.l;
    e["p"] = lp.p;
    e["terms"] = polynomial_json(poly);
    out.push_back(std::move(e));
  }
  return out;
}

ordered_json generating_function_json(const series::GeneratingFunction& f) {
  ordered_json j;
  j["lnpi_coeff"] = f.lnpi_coeff;
  j["terms"] = polynomial_json(f.polynomial);
  j["text"] = f.to_string();
  return j;
}

ordered_json diagram_json(const diagram::Pairing& p, const diagram::LoopReport& report, bool tadpole) {
  ordered_json j;
  j["k"] = p.k();
  ordered_json match = ordered_json::array();
  for (const auto& [a, b] : p.pairs()) match.push_back({a, b});
  j["match"] = std::move(match);
  j["C"] = report.C;
  j["l"] = report.l;
  j["components"] = report.components;
  j["genus"] = report.genus_per_component;
  j["tadpole"] = tadpole;
  return j;
}

ordered_json knot_json(const knot::KnotDiagram& d) {
  ordered_json j;
  j["k"] = d.k;
  j["code"] = d.code.to_string();
  j["coeff_re"] = d.coefficient.re().get_str();
  j["coeff_im"] = d.coefficient.im().get_str();
  j["reduced_code"] = d.reduced_code.to_string();
  return j;
}

ordered_json oracle_json(const gaussian::OracleRecord& r) {
  ordered_json j;
  j["op"] = r.op;
  j["inputs"] = r.inputs;
  j["epsilon"] = r.epsilon;
  j["value_re"] = r.value.real();
  j["value_im"] = r.value.imag();
  return j;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      os << f;
      continue;
    }
    os << '"';
    for (const char c : f) {
      if (c == '"') os << '"';
      os << c;
    }
    os << '"';
  }
  os << '\n';
  return os.str();
}

std::string json_rows_to_csv(const ordered_json& rows, const std::vector<std::string>& columns) {
  std::string out = csv_line(columns);
  for (const auto& row : rows) {
    std::vector<std::string> fields;
    fields.reserve(columns.size());
    for (const auto& col : columns) {
      if (!row.contains(col)) {
        fields.emplace_back();
      } else if (row[col].is_string()) {
        fields.push_back(row[col].get<std::string>());
      } else {
        fields.push_back(row[col].dump());
      }
    }
    out += csv_line(fields);
  }
  return out;
}

}  // namespace tripleline::cli
