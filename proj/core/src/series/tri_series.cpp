#include "tripleline/series/tri_series.hpp"

#include <algorithm>
#include <sstream>

#include "tripleline/errors.hpp"

namespace tripleline::series {

TriSeries::TriSeries(int kmax) : kmax_(kmax) {
  if (kmax < 0) throw ValidationError("truncation order must be non-negative");
}

TriSeries TriSeries::one(int kmax) {
  TriSeries s(kmax);
  s.add(0, 0, 0, 1);
  return s;
}

GaussRational TriSeries::coeff(int k, int n_pow, int d_pow) const {
  const auto it = terms_.find(TriKey{k, n_pow, d_pow});
  return it == terms_.end() ? GaussRational{} : it->second;
}

void TriSeries::add(int k, int n_pow, int d_pow, const GaussRational& value) {
  if (k < 0) throw ValidationError("negative power of g");
  if (k > kmax_ || value.is_zero()) return;
  const TriKey key{k, n_pow, d_pow};
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriSeries TriSeries::order(int k) const {
  TriSeries out(kmax_);
  for (const auto& [key, c] : terms_) {
    if (key.k == k) out.terms_.emplace(key, c);
  }
  return out;
}

TriSeries TriSeries::truncated(int kmax) const {
  TriSeries out(kmax);
  for (const auto& [key, c] : terms_) out.add(key, c);
  return out;
}

TriSeries& TriSeries::operator+=(const TriSeries& o) {
  kmax_ = std::min(kmax_, o.kmax_);
  std::erase_if(terms_, [this](const auto& kv) { return kv.first.k > kmax_; });
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o) {
  kmax_ = std::min(kmax_, o.kmax_);
  std::erase_if(terms_, [this](const auto& kv) { return kv.first.k > kmax_; });
  for (const auto& [key, c] : o.terms_) add(key, -c);
  return *this;
}

TriSeries& TriSeries::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

TriSeries operator*(const TriSeries& a, const TriSeries& b) {
  TriSeries out(std::min(a.kmax_, b.kmax_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add(ka.k + kb.k, ka.n_pow + kb.n_pow, ka.d_pow + kb.d_pow, ca * cb);
    }
  }
  return out;
}

std::string TriSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (key.k == 1) os << " g";
    if (key.k > 1) os << " g^" << key.k;
    if (key.n_pow == 1) os << " N";
    if (key.n_pow != 0 && key.n_pow != 1) os << " N^" << key.n_pow;
    if (key.d_pow == 1) os << " d";
    if (key.d_pow > 1) os << " d^" << key.d_pow;
  }
  return os.str();
}

TriSeries formal_log(const TriSeries& s) {
  TriSeries u = s;
  u -= TriSeries::one(s.kmax());
  for (const auto& [key, c] : u.terms()) {
    if (key.k == 0) {
      throw ValidationError("formal_log: constant term must be exactly 1, found extra term " + c.to_string());
    }
  }
  TriSeries out(s.kmax());
  TriSeries power = u;
  for (int m = 1; m <= s.kmax(); ++m) {
    const GaussRational w(mpq_class(m % 2 == 1 ? 1 : -1, m));
    out += power * w;
    power = power * u;
  }
  return out;
}

TriSeries formal_exp(const TriSeries& u) {
  for (const auto& [key, c] : u.terms()) {
    if (key.k == 0) throw ValidationError("formal_exp: argument must have no order-0 terms");
  }
  TriSeries out = TriSeries::one(u.kmax());
  TriSeries power = TriSeries::one(u.kmax());
  for (int m = 1; m <= u.kmax(); ++m) {
    power = power * u;
    out += power * GaussRational(mpq_class(mpz_class(1), factorial(static_cast<unsigned>(m))));
  }
  return out;
}

}  // namespace tripleline::series
