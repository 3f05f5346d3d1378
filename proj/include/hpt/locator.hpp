#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hpt/bigint.hpp"
#include "hpt/cell.hpp"
#include "hpt/triangle.hpp"

namespace hpt {

/// Quotient/remainder ledger of the Euclidean algorithm on u <= v:
///   v = r_0 u + t_1, u = r_1 t_1 + t_2, ..., t_{n-1} = r_n t_n.
struct EuclidChain {
  BigInt u;
  BigInt v;
  std::vector<BigInt> quotients;   // r_0 .. r_n
  std::vector<BigInt> remainders;  // t_1 .. t_n; empty when u divides v
  BigInt gcd;                      // t_n (u itself when u divides v)
  BigInt quotient_sum;             // r = r_0 + ... + r_{n-1}
  BigInt penultimate;              // t_{n-1}, reading t_0 = u and t_{-1} = v

  std::size_t steps() const noexcept { return remainders.size(); }
};

/// Requires 1 <= u <= v (std::invalid_argument otherwise).
EuclidChain euclid_chain(const BigInt& u, const BigInt& v);

/// Row of the {4,5} triangle in which u and v sit side by side, for
/// 1 <= u <= v:
///   u = 1          -> v
///   u = v != 1     -> v + 2
///   gcd(u, v) = 1  -> t_{n-1} + r
///   gcd(u, v) = d  -> d + 1 + t_{n-1} / d + r  (the d-scaled copy of the
///                     triangle rooted at row d + 1, then the coprime rule)
BigInt locate_row(const BigInt& u, const BigInt& v);

enum class Side { Left, Right };
enum class Verification { FullRow, Unverified };
enum class Orientation { Forward, Mirrored };

std::string_view side_name(Side side) noexcept;
std::string_view verification_name(Verification v) noexcept;
std::string_view orientation_name(Orientation o) noexcept;

/// One leg of the constructive descent: go down `rows` rows, with the
/// escorting TypeB cells on `side`.
struct DescentStep {
  BigInt rows;
  Side side = Side::Left;
  friend bool operator==(const DescentStep&, const DescentStep&) = default;
};

std::vector<DescentStep> descent_trace(const BigInt& u, const BigInt& v);

struct PairLocation {
  BigInt u;
  BigInt v;
  BigInt row;
  /// Column of u when verified (v sits at col + 1, or at col - 1 when the
  /// hit is mirrored); empty means symbolic.
  std::optional<std::size_t> col;
  Verification verified = Verification::Unverified;
  std::optional<Orientation> orientation;
  /// Kinds of the cells holding u and v, when verified.
  std::optional<std::array<CellKind, 2>> kinds;
  std::vector<DescentStep> trace;
};

/// Locates u, v (any order, both >= 1) as row neighbours. When the row fits
/// the cache budget it is generated and scanned: the leftmost (u, v) hit is
/// returned, or else the leftmost (v, u) hit; no hit throws LocationFailure.
/// Rows over budget come back Unverified with a symbolic column.
/// The cache must be for q = 5.
PairLocation locate_pair(const BigInt& u, const BigInt& v, RowCache& cache);
PairLocation locate_pair(const BigInt& u, const BigInt& v,
                         std::size_t cell_budget = kDefaultCellBudget);

/// Locations of (f_j, f_{j+1}), j = 0..m-1, of f_j = eta f_{j-1} + f_{j-2}.
/// Requires 0 < f0 < f1, gcd(f0, f1) = 1, eta >= 1, m >= 1.
std::vector<PairLocation> embed_recurrence(const BigInt& f0, const BigInt& f1, const BigInt& eta,
                                           std::size_t m, RowCache& cache);
std::vector<PairLocation> embed_recurrence(const BigInt& f0, const BigInt& f1, const BigInt& eta,
                                           std::size_t m,
                                           std::size_t cell_budget = kDefaultCellBudget);

/// True if row n of the {4,5} triangle has at most cell_budget cells.
bool row_within_budget(const BigInt& n, std::size_t cell_budget);

}  // namespace hpt
