#include "tripleline/knot/gauss_code.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tripleline/errors.hpp"

namespace tripleline::knot {

GaussCode GaussCode::parse(std::string_view text) {
  std::vector<Crossing> seq;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'O' && c != 'U') {
      throw ValidationError("gauss code: expected O or U at offset " + std::to_string(i) + " in '" +
                            std::string(text) + "'");
    }
    ++i;
    const std::size_t start = i;
    int id = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      id = id * 10 + (text[i] - '0');
      if (id > 1000000) throw ValidationError("gauss code: crossing id too large");
      ++i;
    }
    if (i == start || id < 1) {
      throw ValidationError("gauss code: missing or zero crossing id in '" + std::string(text) + "'");
    }
    seq.push_back({id, c == 'O' ? Passage::Over : Passage::Under});
  }
  return GaussCode(std::move(seq));
}

void GaussCode::validate() const {
  std::map<int, std::pair<int, int>> seen;  // id -> (overs, unders)
  for (const auto& x : seq_) {
    auto& [o, u] = seen[x.id];
    (x.passage == Passage::Over ? o : u) += 1;
  }
  for (const auto& [id, ou] : seen) {
    if (ou.first + ou.second != 2) {
      throw ValidationError("gauss code " + to_string() + ": crossing " + std::to_string(id) + " appears " +
                            std::to_string(ou.first + ou.second) + " times");
    }
    if (ou.first != 1) {
      throw ValidationError("gauss code " + to_string() + ": crossing " + std::to_string(id) +
                            " is not passed once over and once under");
    }
  }
}

GaussCode GaussCode::canonical() const {
  validate();
  if (seq_.empty()) return {};
  const std::size_t n = seq_.size();
  std::vector<Crossing> best;
  std::vector<Crossing> candidate(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < n; ++i) {
      const Crossing& x = seq_[(r + i) % n];
      auto [it, inserted] = relabel.try_emplace(x.id, static_cast<int>(relabel.size()) + 1);
      candidate[i] = {it->second, x.passage};
    }
    if (best.empty() || candidate < best) best = candidate;
  }
  return GaussCode(std::move(best));
}

GaussCode GaussCode::without(int id) const {
  std::vector<Crossing> seq;
  seq.reserve(seq_.size());
  for (const auto& x : seq_) {
    if (x.id != id) seq.push_back(x);
  }
  return GaussCode(std::move(seq));
}

std::string GaussCode::to_string() const {
  std::ostringstream os;
  for (const auto& x : seq_) os << (x.passage == Passage::Over ? 'O' : 'U') << x.id;
  return os.str();
}

bool alternating_check(const GaussCode& c) {
  c.validate();
  const auto& s = c.sequence();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].passage == s[(i + 1) % s.size()].passage) return false;
  }
  return true;
}

std::vector<int> kinks(const GaussCode& c) {
  const auto& s = c.sequence();
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int id = s[i].id;
    if (id == s[(i + 1) % s.size()].id && std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

GaussCode reduce_R1(const GaussCode& c) {
  c.validate();
  GaussCode current = c;
  for (;;) {
    const auto found = kinks(current);
    if (found.empty()) return current;
    current = current.without(found.front());
  }
}

}  // namespace tripleline::knot
