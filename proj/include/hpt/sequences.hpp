#pragma once

#include <cstddef>
#include <vector>

#include "hpt/bigint.hpp"
#include "hpt/quadfield.hpp"
#include "hpt/triangle.hpp"
#include "hpt/triples.hpp"

namespace hpt {

// Row sizes (a_n, b_n, s_n) and row sums of the {4,q} triangle, each by
// three independent routes: the coupled first-order system read off the
// growing rule, the ternary recurrence, and the exact closed form in
// Q(sqrt(D)). All routes take q >= 4 and n >= 1 and throw
// std::invalid_argument otherwise.

CountTriple counts_coupled(int q, std::size_t n);
CountTriple counts_ternary(int q, std::size_t n);
/// Throws DegenerateDiscriminant for q = 4 (D = 0).
CountTriple counts_closed(int q, std::size_t n);

SumTriple sums_coupled(int q, std::size_t n);
SumTriple sums_ternary(int q, std::size_t n);
SumTriple sums_closed(int q, std::size_t n);

/// Element k holds row k + 1 (rows 1..n_max), by the ternary recurrence.
std::vector<CountTriple> counts_series(int q, std::size_t n_max);
std::vector<SumTriple> sums_series(int q, std::size_t n_max);

/// x_n = coeff * root^n + conj(coeff) * conj(root)^n + constant.
struct ClosedForm {
  QuadElem coeff;
  QuadElem root;
  Rational constant;

  /// Exact value; a non-integral result throws (NotRational / NotIntegral).
  BigInt evaluate(std::size_t n) const;
};

struct ClosedFormTriple {
  ClosedForm a;
  ClosedForm b;
  ClosedForm s;
};

/// Closed forms for the counts over D = q^2 - 4q, roots of x^2 - (q-2)x + 1.
ClosedFormTriple count_closed_forms(int q);
/// Closed forms for the sums over D = q^2 - 2q - 7, roots of x^2 - (q-1)x + 2.
ClosedFormTriple sum_closed_forms(int q);

// The remaining operations describe the {4,5} triangle only.

/// s_n mod 2: 0 when n = 1 (mod 3), 1 otherwise. Requires n >= 1.
int parity_s(std::size_t n);

/// Alternating row sum: 1, 0, 0, -2 for n = 0..3; then 0 when n = 1 (mod 3)
/// and 2 otherwise.
BigInt alt_sum(std::size_t n);

/// Alternating sum of a {4,5} row split by kind (signs by global position).
AltTriple alt_triple_from_row(const Row& row);

struct AltPair {
  BigInt alt_a;
  BigInt alt_b;
  friend bool operator==(const AltPair&, const AltPair&) = default;
};

/// Maps the (A, B) alternating subsums of an odd-length row n to those of
/// row n + 3: A' = -4A - 8B - 6, B' = 2A + 4B + 2.
AltPair alt_influence_step(const AltPair& current);

/// Alternating triple of row n obtained by iterating alt_influence_step from
/// the seeds of rows 0 and 2; rows n = 1 (mod 3) are identically zero.
AltTriple alt_triple_by_influence(std::size_t n);

/// Sum over row n of v * label at even positions and w * label at odd ones,
/// from the row sum and the alternating sum. Requires n >= 1.
BigInt weighted_sum(std::size_t n, const BigInt& v, const BigInt& w);

/// The same weighted sum computed directly over a generated row.
BigInt weighted_sum_direct(const Row& row, const BigInt& v, const BigInt& w);

}  // namespace hpt
