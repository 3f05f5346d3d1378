#pragma once

#include "hpt/bigint.hpp"

namespace hpt {

/// (a_n, b_n, s_n): TypeA count, TypeB count, total cell count of row n.
struct CountTriple {
  BigInt a;
  BigInt b;
  BigInt s;
  friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

/// Label sums over TypeA cells, TypeB cells, and the whole row.
struct SumTriple {
  BigInt sum_a;
  BigInt sum_b;
  BigInt sum;
  friend bool operator==(const SumTriple&, const SumTriple&) = default;
};

/// Alternating sum of a row split by kind, signs (-1)^i by global position.
/// total = alt_a + alt_b + wingers, where the two wingers contribute 2 on an
/// odd-length row and cancel (0) on an even-length one.
struct AltTriple {
  BigInt alt_a;
  BigInt alt_b;
  BigInt total;
  friend bool operator==(const AltTriple&, const AltTriple&) = default;
};

}  // namespace hpt
