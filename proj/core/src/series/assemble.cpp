#include "tripleline/series/assemble.hpp"

#include <string>

#include "tripleline/errors.hpp"
#include "tripleline/gaussian/wick_order.hpp"

namespace tripleline::series {

using diagram::Census;
using diagram::CensusKey;
using diagram::VertexLayout;

std::string_view to_string(Convention c) { return c == Convention::Action ? "action" : "paper_series"; }

Convention parse_convention(std::string_view name) {
  if (name == "action") return Convention::Action;
  if (name == "paper_series") return Convention::PaperSeries;
  throw ValidationError("unknown convention '" + std::string(name) + "' (expected action or paper_series)");
}

std::string_view to_string(SeriesAction a) {
  switch (a) {
    case SeriesAction::Standard:
      return "standard";
    case SeriesAction::Symmetric:
      return "symmetric";
    case SeriesAction::WickOrdered:
      return "wick_ordered";
  }
  return "standard";
}

SeriesAction parse_series_action(std::string_view name) {
  if (name == "standard") return SeriesAction::Standard;
  if (name == "symmetric") return SeriesAction::Symmetric;
  if (name == "wick_ordered") return SeriesAction::WickOrdered;
  throw ValidationError("unknown action '" + std::string(name) + "' (expected standard, symmetric or wick_ordered)");
}

GaussRational vertex_coupling(Convention c) {
  return c == Convention::Action ? GaussRational(0, mpq_class(1, 2)) : GaussRational::i();
}

gaussian::PropagatorMatrix action_propagators(SeriesAction a) {
  return a == SeriesAction::Symmetric ? gaussian::general_propagators(gaussian::ActionSpec::Symmetric)
                                      : gaussian::PropagatorMatrix::standard();
}

diagram::MatchMode action_match_mode(SeriesAction a) {
  return a == SeriesAction::Symmetric ? diagram::MatchMode::All : diagram::MatchMode::AbOnly;
}

GaussRational key_amplitude(const CensusKey& key, const gaussian::PropagatorMatrix& props) {
  using gaussian::Family;
  return props.block(Family::A, Family::A).pow(static_cast<unsigned>(key.aa)) *
         props.block(Family::A, Family::B).pow(static_cast<unsigned>(key.ab)) *
         props.block(Family::B, Family::B).pow(static_cast<unsigned>(key.bb));
}

namespace {

GaussRational inverse_factorial(int n) {
  return GaussRational(mpq_class(mpz_class(1), factorial(static_cast<unsigned>(n))));
}

const gaussian::WickCounterterms& counterterms() {
  static const gaussian::WickCounterterms terms = gaussian::derive_wick_counterterms();
  return terms;
}

const Census& empty_census() {
  static const Census census = [] {
    Census c;
    c.pairings = 1;
    c.histogram[CensusKey{}] = 1;
    return c;
  }();
  return census;
}

}  // namespace

DiagramSums::DiagramSums(int kmax, const AssembleOptions& options) : kmax_(kmax), options_(options) {
  if (kmax < 0) throw ValidationError("kmax must be non-negative");
  if (options.max_k > diagram::kMaxOrder) {
    throw ResourceLimitError("order cap " + std::to_string(options.max_k) + " exceeds the hard limit " +
                             std::to_string(diagram::kMaxOrder));
  }
  if (kmax > options.max_k) {
    throw ResourceLimitError("kmax " + std::to_string(kmax) + " exceeds the enumeration cap " +
                             std::to_string(options.max_k));
  }
  if (options.exclude_tadpoles && options.action == SeriesAction::WickOrdered) {
    throw ValidationError("exclude_tadpoles applies to the standard and symmetric actions only");
  }
  diagram::CensusOptions census_options;
  census_options.mode = action_match_mode(options.action);
  census_options.threads = options.threads;
  census_options.max_k = options.max_k;
  for (int k = 1; k <= kmax; ++k) {
    if (options.action == SeriesAction::WickOrdered) {
      for (int a = 0; a <= k; ++a) {
        censuses_.emplace(std::pair{a, k - a}, diagram::run_census(VertexLayout::mixed(a, k - a), census_options));
      }
    } else {
      censuses_.emplace(std::pair{k, 0}, diagram::run_census(k, census_options));
    }
  }
}

const Census& DiagramSums::census(int quartic, int bilinear) const {
  if (quartic == 0 && bilinear == 0) return empty_census();
  const auto it = censuses_.find({quartic, bilinear});
  if (it == censuses_.end()) {
    throw ValidationError("no census for " + std::to_string(quartic) + " quartic and " + std::to_string(bilinear) +
                          " bilinear vertices");
  }
  return it->second;
}

TriSeries DiagramSums::z() const {
  const auto props = action_propagators(options_.action);
  const GaussRational c = vertex_coupling(options_.convention);
  TriSeries out = TriSeries::one(kmax_);
  if (options_.action != SeriesAction::WickOrdered) {
    for (int k = 1; k <= kmax_; ++k) {
      const GaussRational pref = c.pow(static_cast<unsigned>(k)) * inverse_factorial(k);
      for (const auto& [key, count] : census(k).histogram) {
        if (options_.exclude_tadpoles && key.tadpole) continue;
        out.add(k, key.C - k, key.l, pref * key_amplitude(key, props) * GaussRational(mpq_class(mpz_class(count))));
      }
    }
    return out;
  }
  // E[(V + c1 T + c2)^k] expanded multinomially; a quartic, b bilinear, e constant factors.
  const auto& ct = counterterms();
  for (int k = 1; k <= kmax_; ++k) {
    const GaussRational ck = c.pow(static_cast<unsigned>(k));
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; a + b <= k; ++b) {
        const int e = k - a - b;
        const GaussRational pref = ck * inverse_factorial(a) * inverse_factorial(b) * inverse_factorial(e) *
                                   ct.c1.coeff.pow(static_cast<unsigned>(b)) *
                                   ct.c2.coeff.pow(static_cast<unsigned>(e));
        if (pref.is_zero()) continue;
        const int n_shift = -k + b * ct.c1.n_pow + e * ct.c2.n_pow;
        const int d_shift = b * ct.c1.d_pow + e * ct.c2.d_pow;
        for (const auto& [key, count] : census(a, b).histogram) {
          out.add(k, key.C + n_shift, key.l + d_shift,
                  pref * key_amplitude(key, props) * GaussRational(mpq_class(mpz_class(count))));
        }
      }
    }
  }
  return out;
}

TriSeries DiagramSums::connected() const {
  const auto props = action_propagators(options_.action);
  const GaussRational c = vertex_coupling(options_.convention);
  TriSeries out(kmax_);
  auto add_connected = [&](int k, const Census& census, const GaussRational& pref, int n_shift, int d_shift) {
    for (const auto& [key, count] : census.histogram) {
      if (key.components != 1) continue;
      if (options_.exclude_tadpoles && key.tadpole) continue;
      out.add(k, key.C + n_shift, key.l + d_shift,
              pref * key_amplitude(key, props) * GaussRational(mpq_class(mpz_class(count))));
    }
  };
  if (options_.action != SeriesAction::WickOrdered) {
    for (int k = 1; k <= kmax_; ++k) {
      add_connected(k, census(k), c.pow(static_cast<unsigned>(k)) * inverse_factorial(k), -k, 0);
    }
    return out;
  }
  // ln E[exp(c (V + c1 T + c2) / N)] = c c2 / N + connected diagrams of V and T.
  const auto& ct = counterterms();
  if (kmax_ >= 1) out.add(1, ct.c2.n_pow - 1, ct.c2.d_pow, c * ct.c2.coeff);
  for (int k = 1; k <= kmax_; ++k) {
    const GaussRational ck = c.pow(static_cast<unsigned>(k));
    for (int a = 0; a <= k; ++a) {
      const int b = k - a;
      const GaussRational pref =
          ck * inverse_factorial(a) * inverse_factorial(b) * ct.c1.coeff.pow(static_cast<unsigned>(b));
      add_connected(k, census(a, b), pref, -k + b * ct.c1.n_pow, b * ct.c1.d_pow);
    }
  }
  return out;
}

std::vector<std::uint64_t> DiagramSums::planar_single_loop_counts() const {
  const auto props = action_propagators(options_.action);
  const bool drop_tadpoles = options_.exclude_tadpoles || options_.action == SeriesAction::WickOrdered;
  std::vector<std::uint64_t> counts;
  for (int k = 1; k <= kmax_; ++k) {
    const VertexLayout layout = VertexLayout::quartic(k);
    std::uint64_t n = 0;
    for (const auto& [key, count] : census(k).histogram) {
      if (key.components != 1 || key.l != 1) continue;
      if (drop_tadpoles && key.tadpole) continue;
      if (diagram::connected_genus(layout, key) != 0) continue;
      if (key_amplitude(key, props).is_zero()) continue;
      n += count;
    }
    counts.push_back(n);
  }
  return counts;
}

TriSeries assemble_Z(int kmax, const AssembleOptions& options) { return DiagramSums(kmax, options).z(); }

TriSeries connected_assemble(int kmax, const AssembleOptions& options) {
  return DiagramSums(kmax, options).connected();
}

}  // namespace tripleline::series
