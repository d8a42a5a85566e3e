#include "tripleline/knot/export.hpp"

#include "tripleline/diagram/census.hpp"
#include "tripleline/diagram/loops.hpp"
#include "tripleline/errors.hpp"

namespace tripleline::knot {

using diagram::Pairing;
using diagram::VertexLayout;

namespace {

GaussCode walk_greek_loop(const VertexLayout& layout, const Pairing& p) {
  std::vector<Crossing> seq;
  int x = 0;
  do {
    seq.push_back({layout.vertex_of(x) + 1, layout.family_of(x) == gaussian::Family::A ? Passage::Over : Passage::Under});
    x = p.partner(layout.through_leg(x));
  } while (x != 0);
  return GaussCode(std::move(seq));
}

}  // namespace

GaussCode to_gauss_code(const Pairing& p) {
  if (p.leg_count() == 0 || p.leg_count() % 4 != 0) {
    throw ValidationError("to_gauss_code: pairing does not live on quartic vertices");
  }
  const VertexLayout layout = VertexLayout::quartic(p.k());
  const auto a = diagram::analyze(layout, p);
  if (a.components != 1) {
    throw ValidationError("to_gauss_code: pairing " + p.to_string() + " is disconnected (" +
                          std::to_string(a.components) + " components)");
  }
  if (a.max_genus != 0) {
    throw ValidationError("to_gauss_code: pairing " + p.to_string() + " has genus " + std::to_string(a.max_genus));
  }
  if (a.l != 1) {
    throw ValidationError("to_gauss_code: pairing " + p.to_string() + " has " + std::to_string(a.l) +
                          " Greek loops");
  }
  return walk_greek_loop(layout, p);
}

std::vector<KnotDiagram> enumerate_knot_diagrams(int k, const KnotOptions& options) {
  diagram::check_order(k, options.max_k);
  const VertexLayout layout = VertexLayout::quartic(k);
  const auto props = series::action_propagators(options.action);
  const bool drop_tadpoles = options.action == series::SeriesAction::WickOrdered;
  const GaussRational pref = series::vertex_coupling(options.convention).pow(static_cast<unsigned>(k)) *
                             GaussRational(mpq_class(mpz_class(1), factorial(static_cast<unsigned>(k))));

  auto parts = diagram::partitioned_fold<std::vector<KnotDiagram>>(
      layout, series::action_match_mode(options.action), options.threads,
      [] { return std::vector<KnotDiagram>{}; },
      [&](std::vector<KnotDiagram>& acc, const Pairing& p) {
        const auto a = diagram::analyze(layout, p);
        if (a.components != 1 || a.l != 1 || a.max_genus != 0) return;
        if (drop_tadpoles && a.tadpole) return;
        const GaussRational amp = diagram::amplitude(layout, p, props);
        if (amp.is_zero()) return;
        const GaussCode walked = walk_greek_loop(layout, p);
        acc.push_back({k, walked.canonical(), reduce_R1(walked).canonical(), pref * amp, p});
      });
  std::vector<KnotDiagram> out;
  for (auto& part : parts) {
    for (auto& d : part) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace tripleline::knot
