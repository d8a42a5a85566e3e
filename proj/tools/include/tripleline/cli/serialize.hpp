#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tripleline/diagram/layout.hpp"
#include "tripleline/diagram/loops.hpp"
#include "tripleline/exact.hpp"
#include "tripleline/gaussian/oracle.hpp"
#include "tripleline/knot/export.hpp"
#include "tripleline/series/assemble.hpp"
#include "tripleline/series/flp.hpp"
#include "tripleline/series/tri_series.hpp"

namespace tripleline::cli {

using nlohmann::ordered_json;

/// Integer as a JSON number when it fits in a long, otherwise as a decimal string.
ordered_json integer_json(const mpz_class& z);

/// {re_num, re_den, im_num, im_den}.
ordered_json rational_parts(const GaussRational& c);

/// {convention, kmax, terms: [{k, n_pow, d_pow, re_num, re_den, im_num, im_den}]}.
ordered_json series_json(const series::TriSeries& s, series::Convention convention);
/// [{l, p, terms: [{k, re_num, ...}]}] in (l, p) order.
ordered_json flp_json(const series::FlpTable& t);
ordered_json generating_function_json(const series::GeneratingFunction& f);

/// {k, match: [[a, b], ...], C, l, components, genus: [...], tadpole}.
ordered_json diagram_json(const diagram::Pairing& p, const diagram::LoopReport& report, bool tadpole);
/// {k, code, coeff_re, coeff_im, reduced_code}; coefficients are exact rational strings.
ordered_json knot_json(const knot::KnotDiagram& d);
/// {op, inputs, epsilon, value_re, value_im}.
ordered_json oracle_json(const gaussian::OracleRecord& r);

/// One CSV record ending in a newline; fields are quoted when needed.
std::string csv_line(const std::vector<std::string>& fields);

/// Flattens an array of flat JSON objects into CSV with the given columns;
/// nested values are written as their JSON text.
std::string json_rows_to_csv(const ordered_json& rows, const std::vector<std::string>& columns);

}  // namespace tripleline::cli
