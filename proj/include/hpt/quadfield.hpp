#pragma once

#include <cstdint>
#include <string>

#include "hpt/bigint.hpp"

namespace hpt {

/// Exact element re + rt * sqrt(disc) of Q(sqrt(disc)).
///
/// The discriminant travels with each element; combining elements built over
/// different discriminants throws DiscriminantMismatch. disc is not reduced
/// (no square-free factoring), so e.g. disc = 4 is a valid but non-canonical
/// carrier and equality is only meaningful between elements sharing disc.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(Rational re, Rational rt, BigInt disc);

  static QuadElem rational(Rational re, const BigInt& disc) {
    return QuadElem(std::move(re), Rational(0), disc);
  }
  static QuadElem one(const BigInt& disc) { return rational(Rational(1), disc); }

  const Rational& re() const noexcept { return re_; }
  const Rational& rt() const noexcept { return rt_; }
  const BigInt& disc() const noexcept { return disc_; }

  QuadElem conj() const { return QuadElem(re_, -rt_, disc_); }
  /// Field norm re^2 - rt^2 * disc.
  Rational norm() const;

  /// Exact sign (-1, 0, 1) of the real number re + rt * sqrt(disc).
  int sign() const;

  QuadElem& operator+=(const QuadElem& other);
  QuadElem& operator-=(const QuadElem& other);
  QuadElem& operator*=(const QuadElem& other);

  QuadElem operator-() const { return QuadElem(-re_, -rt_, disc_); }

  friend bool operator==(const QuadElem& a, const QuadElem& b);

  std::string str() const;

 private:
  Rational re_{0};
  Rational rt_{0};
  BigInt disc_{0};
};

QuadElem operator+(QuadElem a, const QuadElem& b);
QuadElem operator-(QuadElem a, const QuadElem& b);
QuadElem operator*(QuadElem a, const QuadElem& b);

/// x^n by repeated squaring; pow(x, 0) is 1 over x.disc().
QuadElem pow(const QuadElem& x, std::uint64_t n);

/// n when x == n + 0*sqrt(d) with n integral.
/// Throws NotRational if rt != 0, NotIntegral if re is not an integer.
BigInt as_integer(const QuadElem& x);

}  // namespace hpt
