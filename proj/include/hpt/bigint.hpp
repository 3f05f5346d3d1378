#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace hpt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den; throws std::domain_error on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

BigInt from_u128(unsigned __int128 x);

inline std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x);

/// Exact conversion; throws std::overflow_error if x does not fit.
std::uint64_t to_u64(const BigInt& x);
std::size_t to_size(const BigInt& x);

BigInt pow2(std::uint64_t exponent);

}  // namespace hpt
