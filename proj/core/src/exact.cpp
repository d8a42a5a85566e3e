#include "tripleline/exact.hpp"

#include <stdexcept>

namespace tripleline {

GaussRational GaussRational::i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussRational GaussRational::from_ints(long re_num, long re_den, long im_num, long im_den) {
  if (re_den == 0 || im_den == 0) throw std::domain_error("zero denominator");
  return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussRational GaussRational::pow(unsigned n) const {
  GaussRational result(1);
  GaussRational base = *this;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw std::domain_error("GaussRational division by zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRational::to_string() const {
  auto imag_part = [](const mpq_class& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "i";
  };
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part(im_);
  std::string out = re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + imag_part(im_);
  } else {
    out += " - " + imag_part(mpq_class(-im_));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace tripleline
