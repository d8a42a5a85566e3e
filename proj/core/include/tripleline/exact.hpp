#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace tripleline {

/// Exact complex number a + b i with a, b rational. All series coefficients,
/// propagator blocks and diagram amplitudes live in this ring.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  GaussRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)

  static GaussRational i() { return GaussRational(0, 1); }
  /// i^n for any integer n.
  static GaussRational i_pow(long n);
  static GaussRational from_ints(long re_num, long re_den, long im_num, long im_den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussRational conj() const { return {re_, -im_}; }
  GaussRational pow(unsigned n) const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  /// Throws std::domain_error on division by zero.
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "3/2", "-i", "1/2 - 3/4i", "0".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// n! as an exact integer.
mpz_class factorial(unsigned n);

}  // namespace tripleline
