#include "hpt/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace hpt {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BigInt from_u128(unsigned __int128 x) {
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(x >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(x));
  return (hi << 64) + lo;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64)
    throw std::overflow_error("integer " + x.get_str() + " does not fit 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

std::size_t to_size(const BigInt& x) {
  const std::uint64_t v = to_u64(x);
  if (v > std::numeric_limits<std::size_t>::max())
    throw std::overflow_error("integer does not fit size_t");
  return static_cast<std::size_t>(v);
}

BigInt pow2(std::uint64_t exponent) {
  BigInt out;
  mpz_setbit(out.get_mpz_t(), exponent);
  return out;
}

}  // namespace hpt
