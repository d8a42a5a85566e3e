#include "tripleline/diagram/layout.hpp"

#include <algorithm>
#include <sstream>

#include "tripleline/errors.hpp"

namespace tripleline::diagram {

VertexLayout VertexLayout::quartic(int k) { return mixed(k, 0); }

VertexLayout VertexLayout::mixed(int quartic, int bilinear) {
  if (quartic < 0 || bilinear < 0 || 4 * quartic + 2 * bilinear > kMaxLegs) {
    throw ValidationError("VertexLayout: vertex counts out of range");
  }
  VertexLayout lay;
  lay.quartic_ = quartic;
  auto push_leg = [&](int vertex, Family fam, int next, int slot, int through) {
    lay.vertex_.push_back(static_cast<std::uint8_t>(vertex));
    lay.family_.push_back(fam);
    lay.next_.push_back(static_cast<std::uint8_t>(next));
    lay.slot_.push_back(static_cast<std::uint8_t>(slot));
    lay.through_.push_back(static_cast<std::uint8_t>(through));
  };
  int leg = 0;
  for (int v = 0; v < quartic; ++v, leg += 4) {
    lay.first_leg_.push_back(static_cast<std::uint8_t>(leg));
    const int mu_slot = lay.slots_++;
    const int nu_slot = lay.slots_++;
    for (int pos = 0; pos < 4; ++pos) {
      push_leg(v, pos % 2 == 0 ? Family::A : Family::B, leg + (pos + 1) % 4, pos % 2 == 0 ? mu_slot : nu_slot,
               leg + (pos + 2) % 4);
    }
  }
  for (int v = quartic; v < quartic + bilinear; ++v, leg += 2) {
    lay.first_leg_.push_back(static_cast<std::uint8_t>(leg));
    const int slot = lay.slots_++;
    push_leg(v, Family::A, leg + 1, slot, leg + 1);
    push_leg(v, Family::B, leg, slot, leg);
  }
  return lay;
}

std::string to_string(MatchMode m) { return m == MatchMode::AbOnly ? "ab_only" : "all"; }

Pairing::Pairing(int legs) {
  if (legs < 0 || legs > kMaxLegs || legs % 2 != 0) throw ValidationError("Pairing: leg count must be even and <= 32");
  legs_ = static_cast<std::uint8_t>(legs);
  for (int i = 0; i < legs; ++i) match_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Pairing Pairing::from_pairs(int k, std::initializer_list<std::pair<int, int>> pairs) {
  return from_pairs_on_legs(4 * k, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Pairing Pairing::from_pairs_on_legs(int legs, std::span<const std::pair<int, int>> pairs) {
  Pairing p(legs);
  std::vector<bool> seen(static_cast<std::size_t>(legs), false);
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= legs || b >= legs || a == b || seen[static_cast<std::size_t>(a)] ||
        seen[static_cast<std::size_t>(b)]) {
      throw ValidationError("Pairing: pairs do not form a perfect matching");
    }
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    p.join(a, b);
  }
  if (static_cast<int>(pairs.size()) * 2 != legs) throw ValidationError("Pairing: matching is not perfect");
  return p;
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < legs_; ++a) {
    if (partner(a) > a) out.emplace_back(a, partner(a));
  }
  return out;
}

bool Pairing::is_involution() const {
  for (int a = 0; a < legs_; ++a) {
    const int b = partner(a);
    if (b == a || b >= legs_ || partner(b) != a) return false;
  }
  return true;
}

bool Pairing::is_ab_only(const VertexLayout& layout) const {
  for (int a = 0; a < legs_; ++a) {
    if (layout.family_of(a) == layout.family_of(partner(a))) return false;
  }
  return true;
}

std::string Pairing::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [a, b] : pairs()) {
    os << (first ? "" : ",") << '(' << a << ',' << b << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Pairing& a, const Pairing& b) {
  if (auto c = a.legs_ <=> b.legs_; c != 0) return c;
  for (int i = 0; i < a.legs_; ++i) {
    if (auto c = a.partner(i) <=> b.partner(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace tripleline::diagram
