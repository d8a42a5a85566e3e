#include "tripleline/series/flp.hpp"

#include <sstream>
#include <string>

#include "tripleline/errors.hpp"

namespace tripleline::series {

namespace {

std::string term_label(const TriKey& key) {
  return "g^" + std::to_string(key.k) + " N^" + std::to_string(key.n_pow) + " d^" + std::to_string(key.d_pow);
}

void add_to(GPolynomial& p, int k, const GaussRational& c) {
  auto [it, inserted] = p.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// Sign and body of a coefficient that is purely real or purely imaginary;
// mixed coefficients keep parentheses.
std::pair<bool, std::string> signed_body(const GaussRational& c) {
  if (c.is_real()) {
    const bool neg = sgn(c.re()) < 0;
    return {neg, mpq_class(abs(c.re())).get_str()};
  }
  if (sgn(c.re()) == 0) {
    const bool neg = sgn(c.im()) < 0;
    const mpq_class mag = abs(c.im());
    return {neg, mag == 1 ? std::string("i") : mag.get_str() + " i"};
  }
  return {false, "(" + c.to_string() + ")"};
}

}  // namespace

std::string polynomial_to_string(const GPolynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p) {
    auto [neg, body] = signed_body(c);
    if (first) {
      os << (neg ? "-" : "");
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = body == "1";
    if (k == 0) {
      os << body;
      continue;
    }
    if (!unit) os << body << ' ';
    os << 'g';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

GPolynomial FlpTable::at(int l, int p) const {
  const auto it = entries.find(LinkGenus{l, p});
  return it == entries.end() ? GPolynomial{} : it->second;
}

TriSeries FlpTable::to_series() const {
  TriSeries out(kmax);
  for (const auto& [lp, poly] : entries) {
    for (const auto& [k, c] : poly) out.add(k, 2 - 2 * lp.p, lp.l, c);
  }
  return out;
}

FlpTable extract_Flp(const TriSeries& ln_z_normalized) {
  FlpTable table;
  table.kmax = ln_z_normalized.kmax();
  for (const auto& [key, c] : ln_z_normalized.terms()) {
    const int twice_p = 2 - key.n_pow;
    if (key.k < 1) throw StructuralViolation("normalized ln Z has an order-0 term " + term_label(key));
    if (twice_p < 0 || twice_p % 2 != 0) {
      throw StructuralViolation("coefficient of " + term_label(key) + " is off the lattice N^{2-2p}");
    }
    if (key.d_pow < 1) throw StructuralViolation("coefficient of " + term_label(key) + " has no Greek loop");
    add_to(table.entries[LinkGenus{key.d_pow, twice_p / 2}], key.k, c);
  }
  std::erase_if(table.entries, [](const auto& kv) { return kv.second.empty(); });
  return table;
}

std::string GeneratingFunction::to_string() const {
  std::ostringstream os;
  if (lnpi_coeff != 0) {
    if (lnpi_coeff == -1) os << '-';
    if (lnpi_coeff != 1 && lnpi_coeff != -1) os << lnpi_coeff << ' ';
    os << "ln π";
  }
  if (polynomial.empty()) {
    if (lnpi_coeff == 0) os << '0';
    return os.str();
  }
  std::string poly = polynomial_to_string(polynomial);
  if (lnpi_coeff == 0) return poly;
  if (poly.front() == '-') {
    os << " - " << poly.substr(1);
  } else {
    os << " + " << poly;
  }
  return os.str();
}

GeneratingFunction F_of_g(const FlpTable& table) { return {1, table.at(1, 0)}; }

FullLogSeries full_log_series(const TriSeries& ln_z_normalized) {
  FullLogSeries out;
  out.normalized = ln_z_normalized;
  return out;
}

DoubleLimitResult double_limit(const FullLogSeries& ln_z, int kmax) {
  DoubleLimitResult result;
  // A monomial N^a d^b, divided by d N^2, survives both limits iff a = 2 and b = 1.
  auto survives = [](int a, int b, const std::string& what) {
    const int n = a - 2;
    const int d = b - 1;
    if (n > 0) throw StructuralViolation(what + " grows like N^" + std::to_string(n) + " after division by dN^2");
    if (d < 0) throw StructuralViolation(what + " diverges like d^" + std::to_string(d) + " after division by dN^2");
    return n == 0 && d == 0;
  };
  survives(ln_z.ln2_n, ln_z.ln2_d, "ln 2 constant");
  if (survives(ln_z.lnpi_n, ln_z.lnpi_d, "ln pi constant")) result.limit.lnpi_coeff = 1;
  for (const auto& [key, c] : ln_z.normalized.terms()) {
    if (key.k > kmax) continue;
    if (survives(key.n_pow, key.d_pow, "term " + term_label(key))) add_to(result.limit.polynomial, key.k, c);
  }
  result.expected = F_of_g(extract_Flp(ln_z.normalized.truncated(std::min(kmax, ln_z.normalized.kmax()))));
  result.ok = result.limit == result.expected;
  return result;
}

bool double_limit_check(const FullLogSeries& ln_z, int kmax) { return double_limit(ln_z, kmax).ok; }

}  // namespace tripleline::series
