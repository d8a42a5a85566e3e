#include "tripleline/diagram/loops.hpp"

#include <array>
#include <numeric>
#include <string>

#include "tripleline/errors.hpp"

namespace tripleline::diagram {

namespace {

const VertexLayout& quartic_layout_for(const Pairing& p) {
  static const auto layouts = [] {
    std::array<VertexLayout, kMaxLegs / 4 + 1> out;
    for (int k = 0; k <= kMaxLegs / 4; ++k) out[static_cast<std::size_t>(k)] = VertexLayout::quartic(k);
    return out;
  }();
  if (p.leg_count() % 4 != 0) throw ValidationError("pairing does not live on quartic vertices");
  return layouts[static_cast<std::size_t>(p.k())];
}

void check_compatible(const VertexLayout& layout, const Pairing& p) {
  if (layout.leg_count() != p.leg_count()) throw ValidationError("pairing and layout disagree on leg count");
}

/// Small union-find on at most kMaxLegs elements.
class Dsu {
 public:
  explicit Dsu(int n) : n_(n) { std::iota(parent_.begin(), parent_.begin() + n, std::uint8_t{0}); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[px];
      x = px;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = static_cast<std::uint8_t>(std::min(a, b));
  }
  int roots() {
    int r = 0;
    for (int i = 0; i < n_; ++i) r += find(i) == i ? 1 : 0;
    return r;
  }

 private:
  int n_;
  std::array<std::uint8_t, kMaxLegs> parent_{};
};

}  // namespace

int trace_latin_loops(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int start = 0; start < p.leg_count(); ++start) {
    if ((seen >> start) & 1U) continue;
    ++cycles;
    int x = start;
    do {
      seen |= std::uint32_t{1} << x;
      x = layout.next_in_trace(p.partner(x));
    } while (x != start);
  }
  return cycles;
}

int trace_latin_loops(const Pairing& p) { return trace_latin_loops(quartic_layout_for(p), p); }

std::vector<int> latin_port_cycles(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  const int legs = p.leg_count();
  const int ports = 2 * legs;
  auto row = [](int leg) { return 2 * leg; };
  auto col = [](int leg) { return 2 * leg + 1; };
  // Each port has exactly one trace neighbour and one propagator neighbour.
  std::vector<int> trace_nb(static_cast<std::size_t>(ports), -1);
  std::vector<int> prop_nb(static_cast<std::size_t>(ports), -1);
  auto link = [](std::vector<int>& nb, int a, int b) {
    if (nb[static_cast<std::size_t>(a)] != -1 || nb[static_cast<std::size_t>(b)] != -1) {
      throw InvariantViolation("latin port graph is not 2-regular");
    }
    nb[static_cast<std::size_t>(a)] = b;
    nb[static_cast<std::size_t>(b)] = a;
  };
  for (int x = 0; x < legs; ++x) link(trace_nb, col(x), row(layout.next_in_trace(x)));
  for (const auto& [x, y] : p.pairs()) {
    link(prop_nb, row(x), col(y));
    link(prop_nb, col(x), row(y));
  }
  std::vector<bool> seen(static_cast<std::size_t>(ports), false);
  std::vector<int> lengths;
  for (int start = 0; start < ports; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int port = start;
    bool via_trace = true;
    do {
      seen[static_cast<std::size_t>(port)] = true;
      ++len;
      port = via_trace ? trace_nb[static_cast<std::size_t>(port)] : prop_nb[static_cast<std::size_t>(port)];
      via_trace = !via_trace;
    } while (port != start || !via_trace);
    lengths.push_back(len);
  }
  return lengths;
}

int trace_greek_loops(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  Dsu slots(layout.slot_count());
  for (const auto& [x, y] : p.pairs()) slots.unite(layout.slot_of(x), layout.slot_of(y));
  return slots.roots();
}

int trace_greek_loops(const Pairing& p) { return trace_greek_loops(quartic_layout_for(p), p); }

DiagramAnalysis analyze(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  const int legs = p.leg_count();
  const int vertices = layout.vertex_count();
  DiagramAnalysis out;

  Dsu comps(vertices);
  Dsu slots(layout.slot_count());
  for (int x = 0; x < legs; ++x) {
    const int y = p.partner(x);
    if (y < x) continue;
    const int vx = layout.vertex_of(x);
    const int vy = layout.vertex_of(y);
    comps.unite(vx, vy);
    slots.unite(layout.slot_of(x), layout.slot_of(y));
    out.tadpole = out.tadpole || vx == vy;
    const Family fx = layout.family_of(x);
    const Family fy = layout.family_of(y);
    if (fx != fy) {
      ++out.ab;
    } else if (fx == Family::A) {
      ++out.aa;
    } else {
      ++out.bb;
    }
  }
  out.l = slots.roots();

  std::array<int, kMaxLegs> latin{};
  std::array<int, kMaxLegs> verts{};
  std::array<int, kMaxLegs> comp_legs{};
  std::uint32_t seen = 0;
  for (int start = 0; start < legs; ++start) {
    if ((seen >> start) & 1U) continue;
    ++out.C;
    ++latin[static_cast<std::size_t>(comps.find(layout.vertex_of(start)))];
    int x = start;
    do {
      seen |= std::uint32_t{1} << x;
      x = layout.next_in_trace(p.partner(x));
    } while (x != start);
  }
  for (int v = 0; v < vertices; ++v) {
    const auto root = static_cast<std::size_t>(comps.find(v));
    ++verts[root];
    comp_legs[root] += layout.vertex_size(v);
  }
  for (int v = 0; v < vertices; ++v) {
    if (comps.find(v) != v) continue;
    ++out.components;
    const auto r = static_cast<std::size_t>(v);
    const int twice_genus = 2 - verts[r] + comp_legs[r] / 2 - latin[r];
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw InvariantViolation("non-integral or negative genus (2p = " + std::to_string(twice_genus) +
                               ") for pairing " + p.to_string());
    }
    out.max_genus = std::max(out.max_genus, twice_genus / 2);
    out.genus_sum += twice_genus / 2;
  }
  return out;
}

LoopReport components_and_genus(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  analyze(layout, p);  // integrality check
  const int vertices = layout.vertex_count();
  Dsu comps(vertices);
  for (const auto& [x, y] : p.pairs()) comps.unite(layout.vertex_of(x), layout.vertex_of(y));

  LoopReport report;
  report.C = trace_latin_loops(layout, p);
  report.l = trace_greek_loops(layout, p);
  std::vector<int> index_of_root(static_cast<std::size_t>(vertices), -1);
  std::vector<int> legs_per_component;
  for (int v = 0; v < vertices; ++v) {
    const int root = comps.find(v);
    if (index_of_root[static_cast<std::size_t>(root)] == -1) {
      index_of_root[static_cast<std::size_t>(root)] = report.components++;
      report.latin_per_component.push_back(0);
      report.vertices_per_component.push_back(0);
      legs_per_component.push_back(0);
    }
    const auto c = static_cast<std::size_t>(index_of_root[static_cast<std::size_t>(root)]);
    ++report.vertices_per_component[c];
    legs_per_component[c] += layout.vertex_size(v);
  }
  std::uint32_t seen = 0;
  for (int start = 0; start < p.leg_count(); ++start) {
    if ((seen >> start) & 1U) continue;
    const auto c = static_cast<std::size_t>(
        index_of_root[static_cast<std::size_t>(comps.find(layout.vertex_of(start)))]);
    ++report.latin_per_component[c];
    int x = start;
    do {
      seen |= std::uint32_t{1} << x;
      x = layout.next_in_trace(p.partner(x));
    } while (x != start);
  }
  for (int c = 0; c < report.components; ++c) {
    const auto i = static_cast<std::size_t>(c);
    const int twice = 2 - report.vertices_per_component[i] + legs_per_component[i] / 2 - report.latin_per_component[i];
    report.genus_per_component.push_back(twice / 2);
  }
  return report;
}

LoopReport components_and_genus(const Pairing& p) { return components_and_genus(quartic_layout_for(p), p); }

bool is_tadpole(const VertexLayout& layout, const Pairing& p) {
  check_compatible(layout, p);
  for (int x = 0; x < p.leg_count(); ++x) {
    if (layout.vertex_of(x) == layout.vertex_of(p.partner(x))) return true;
  }
  return false;
}

bool is_tadpole(const Pairing& p) { return is_tadpole(quartic_layout_for(p), p); }

GaussRational amplitude(const VertexLayout& layout, const Pairing& p, const PropagatorMatrix& props) {
  check_compatible(layout, p);
  GaussRational amp(1);
  for (const auto& [x, y] : p.pairs()) {
    amp *= props.block(layout.family_of(x), layout.family_of(y));
    if (amp.is_zero()) break;
  }
  return amp;
}

GaussRational DiagramWeight::evaluate(int N, int d) const {
  mpz_class n_pow;
  mpz_class d_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(C));
  mpz_ui_pow_ui(d_pow.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(l));
  return amplitude * GaussRational(mpq_class(n_pow * d_pow));
}

DiagramWeight diagram_weight(const Pairing& p, const PropagatorMatrix& props) {
  const VertexLayout& layout = quartic_layout_for(p);
  const DiagramAnalysis a = analyze(layout, p);
  DiagramWeight w;
  w.k = p.k();
  w.C = a.C;
  w.l = a.l;
  w.amplitude = amplitude(layout, p, props);
  for (int e = 0; e < 4; ++e) {
    if (w.amplitude == GaussRational::i_pow(e)) {
      // Representative in the residue class of the propagator count.
      const int props_count = 2 * w.k;
      w.phase_ipow = props_count - ((props_count - e) % 4 + 4) % 4;
      break;
    }
  }
  w.connected = !w.amplitude.is_zero() && a.components == 1;
  return w;
}

}  // namespace tripleline::diagram
