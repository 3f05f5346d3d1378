#include "hpt/quadfield.hpp"

#include "hpt/errors.hpp"

namespace hpt {
namespace {

void require_same_disc(const QuadElem& a, const QuadElem& b) {
  if (a.disc() != b.disc())
    throw DiscriminantMismatch("cannot combine elements over sqrt(" + a.disc().get_str() +
                               ") and sqrt(" + b.disc().get_str() + ")");
}

int sgn(const Rational& x) { return sgn(x.get_num()); }

}  // namespace

QuadElem::QuadElem(Rational re, Rational rt, BigInt disc)
    : re_(std::move(re)), rt_(std::move(rt)), disc_(std::move(disc)) {
  if (disc_ < 0) throw std::invalid_argument("negative discriminant");
  re_.canonicalize();
  rt_.canonicalize();
}

Rational QuadElem::norm() const { return re_ * re_ - rt_ * rt_ * Rational(disc_); }

int QuadElem::sign() const {
  const int a = sgn(re_);
  const int b = (disc_ == 0) ? 0 : sgn(rt_);
  if (b == 0) return a;
  if (a == 0 || a == b) return b;
  // Opposite signs: compare re^2 against rt^2 * disc.
  const Rational lhs = re_ * re_;
  const Rational rhs = rt_ * rt_ * Rational(disc_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? a : b;
}

QuadElem& QuadElem::operator+=(const QuadElem& other) {
  require_same_disc(*this, other);
  re_ += other.re_;
  rt_ += other.rt_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& other) {
  require_same_disc(*this, other);
  re_ -= other.re_;
  rt_ -= other.rt_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& other) {
  require_same_disc(*this, other);
  Rational re = re_ * other.re_ + rt_ * other.rt_ * Rational(disc_);
  Rational rt = re_ * other.rt_ + rt_ * other.re_;
  re_ = std::move(re);
  rt_ = std::move(rt);
  return *this;
}

bool operator==(const QuadElem& a, const QuadElem& b) {
  return a.disc_ == b.disc_ && a.re_ == b.re_ && a.rt_ == b.rt_;
}

std::string QuadElem::str() const {
  return to_string(re_) + (sgn(rt_) < 0 ? " - " : " + ") + to_string(abs(rt_)) + "*sqrt(" +
         disc_.get_str() + ")";
}

QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }

QuadElem pow(const QuadElem& x, std::uint64_t n) {
  QuadElem result = QuadElem::one(x.disc());
  QuadElem base = x;
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

BigInt as_integer(const QuadElem& x) {
  if (x.rt() != 0) throw NotRational("not rational: " + x.str());
  if (x.re().get_den() != 1) throw NotIntegral("not an integer: " + x.str());
  return x.re().get_num();
}

}  // namespace hpt
