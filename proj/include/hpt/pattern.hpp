#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "hpt/bigint.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

// A/B pattern of the {4,5} triangle. Here wingers read as B: TypeA maps to
// bit 0 and everything else to bit 1, leftmost cell first.
//
// Functions taking a RowCache require cache.params().q() == 5 and throw
// std::invalid_argument otherwise; generation may throw BudgetExceeded.

struct PatternCode {
  std::size_t n = 0;
  BigInt phi;
  std::size_t length = 0;

  /// length characters of '0'/'1', most significant first.
  std::string binary() const;
};

PatternCode encode_row(const Row& row);

/// "A"/"B" string of a row, wingers shown as B.
std::string pattern_string(const Row& row);

BigInt phi(RowCache& cache, std::size_t n);
/// phi(n + 1) - phi(n).
BigInt big_phi(RowCache& cache, std::size_t n);

/// s_{n+1} - s_n from the count recurrence (q = 5).
std::uint64_t cap_s_exponent(std::size_t n);
/// 2^(s_{n+1} - s_n).
BigInt cap_s(std::size_t n);

/// Checks, at index n >= 3, that
///   Phi_n = (S_n / S_{n-1} + S_n + S_{n-1}) Phi_{n-1} - S_{n-1}^2 Phi_{n-2}
/// holds exactly. Returns false if S_n / S_{n-1} is not an integer.
/// n < 3 throws std::invalid_argument.
bool verify_phi_recurrence(RowCache& cache, std::size_t n);

/// The first s_n characters of row n + 1's pattern equal row n's pattern.
/// n = 1 is excluded (std::invalid_argument).
bool check_prefix(RowCache& cache, std::size_t n);

/// The centred length-s_n window of row n + 3's pattern equals row n's.
bool check_central_copy(RowCache& cache, std::size_t n);

/// Row 3k has a TypeB central cell labelled 2^k. k >= 1.
bool check_central_value(RowCache& cache, std::size_t k);

}  // namespace hpt
