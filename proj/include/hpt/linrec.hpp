#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hpt/bigint.hpp"

namespace hpt {

/// x' = a1 x + b1 y + c1,  y' = a2 x + b2 y + c2.
struct CoupledSystem {
  Rational a1, b1, c1;
  Rational a2, b2, c2;
};

/// z_{n+3} = A z_{n+2} + B z_{n+1} + C z_n
struct TernaryCoeffs {
  Rational A, B, C;
  friend bool operator==(const TernaryCoeffs&, const TernaryCoeffs&) = default;
};

/// z_{n+2} = A z_{n+1} + B z_n
struct BinaryCoeffs {
  Rational A, B;
  friend bool operator==(const BinaryCoeffs&, const BinaryCoeffs&) = default;
};

/// Whether eliminate insists on a2 * b1 != 0. The coefficients are those of
/// (x - 1)(x^2 - (a1 + b2) x + a1 b2 - a2 b1), the characteristic polynomial
/// of the augmented 3x3 system matrix, so by Cayley-Hamilton they remain
/// valid for a decoupled system too; Waive accepts that case.
enum class Hypothesis { Enforce, Waive };

/// Ternary recurrence satisfied by both x_n and y_n:
///   A = a1 + b2 + 1, B = a2 b1 - a1 b2 - a1 - b2, C = a1 b2 - a2 b1.
/// Throws HypothesisViolated when a2 * b1 == 0, unless waived.
TernaryCoeffs eliminate(const CoupledSystem& sys, Hypothesis h = Hypothesis::Enforce);

/// For c1 = c2 = 0 the binary recurrence A = a1 + b2, B = a2 b1 - a1 b2.
/// Nonzero constants throw std::invalid_argument; a2 * b1 == 0 throws
/// HypothesisViolated unless waived.
BinaryCoeffs eliminate_homogeneous(const CoupledSystem& sys,
                                   Hypothesis h = Hypothesis::Enforce);

/// Every window of four consecutive terms satisfies the recurrence.
/// Requires seq.size() >= 4 (std::invalid_argument).
bool check_satisfies(std::span<const Rational> seq, const TernaryCoeffs& coeffs);
/// Same for a binary recurrence; requires seq.size() >= 3.
bool check_satisfies(std::span<const Rational> seq, const BinaryCoeffs& coeffs);

/// (x_k, y_k) for k = 0..steps, starting from (x0, y0).
std::pair<std::vector<Rational>, std::vector<Rational>> iterate(const CoupledSystem& sys,
                                                                const Rational& x0,
                                                                const Rational& y0,
                                                                std::size_t steps);

}  // namespace hpt
