#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hpt/bigint.hpp"
#include "hpt/cell.hpp"
#include "hpt/triples.hpp"

namespace hpt {

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

/// Mosaic {4,q}. q = 4 is the Euclidean case (ordinary Pascal triangle).
class TriangleParams {
 public:
  /// Throws std::invalid_argument for q < 4.
  explicit TriangleParams(int q);

  int q() const noexcept { return q_; }
  /// TypeB children emitted by an inner cell of the given kind.
  std::size_t private_children(CellKind kind) const noexcept;

  friend bool operator==(const TriangleParams&, const TriangleParams&) = default;

 private:
  int q_;
};

/// One row of the triangle. Labels are stored as 64-bit words while they
/// fit ("narrow") and as GMP integers after the first overflow ("wide").
class Row {
 public:
  std::size_t index() const noexcept { return n_; }
  std::size_t size() const noexcept { return kinds_.size(); }
  bool is_wide() const noexcept { return wide_; }

  CellKind kind(std::size_t k) const { return kinds_.at(k); }
  BigInt value(std::size_t k) const;
  Cell cell(std::size_t k) const { return Cell{value(k), kind(k)}; }

  std::span<const CellKind> kinds() const noexcept { return kinds_; }
  /// Throws std::logic_error on a wide row.
  std::span<const std::uint64_t> narrow_values() const;
  /// Throws std::logic_error on a narrow row.
  std::span<const BigInt> wide_values() const;
  std::vector<BigInt> values() const;

  /// Values and kinds both read the same in either direction.
  bool is_palindrome() const;

 private:
  friend Row initial_row();
  friend Row next_row(const Row& row, const TriangleParams& params);

  std::size_t n_ = 0;
  bool wide_ = false;
  std::vector<CellKind> kinds_;
  std::vector<std::uint64_t> narrow_;
  std::vector<BigInt> wide_values_;
};

/// Row 0: the base vertex, classified as a winger.
Row initial_row();

/// Cell count of the row next_row would produce, without building it.
std::size_t next_row_size(const Row& row, const TriangleParams& params);

/// Applies the growing rule. Wingers emit a winger child and share an A
/// child with their inner neighbour; every adjacent pair of cells meets in
/// one TypeA child labelled with the sum; inner A cells add q-4 TypeB
/// children and inner B cells add q-3, each carrying the parent's label.
Row next_row(const Row& row, const TriangleParams& params);

/// Parents of one child cell (second is set for TypeA children).
struct Parents {
  std::size_t first = 0;
  std::optional<std::size_t> second;
};

/// For every cell of next_row(row), the indices of its parents in row.
std::vector<Parents> child_parents(const Row& row, const TriangleParams& params);

/// Streams rows 0..n_max to visit in order. Throws BudgetExceeded, naming the
/// first row that would hold more than cell_budget cells; rows before it
/// have already been delivered.
void for_each_row(const TriangleParams& params, std::size_t n_max, std::size_t cell_budget,
                  const std::function<void(const Row&)>& visit);

std::vector<Row> generate_rows(const TriangleParams& params, std::size_t n_max,
                               std::size_t cell_budget = kDefaultCellBudget);

/// Lazily grown, memoized rows of one triangle.
class RowCache {
 public:
  explicit RowCache(TriangleParams params, std::size_t cell_budget = kDefaultCellBudget);

  const TriangleParams& params() const noexcept { return params_; }
  std::size_t budget() const noexcept { return budget_; }
  std::size_t generated() const noexcept { return rows_.size(); }

  /// Throws BudgetExceeded if row n (or an earlier one) is over budget.
  /// The reference lives as long as the cache.
  const Row& row(std::size_t n);

 private:
  TriangleParams params_;
  std::size_t budget_;
  std::deque<Row> rows_;  // deque: references handed out stay valid
};

/// Label totals split by kind and by index parity: totals[kind][i % 2].
using KindParityTotals = std::array<std::array<BigInt, 2>, 3>;
KindParityTotals kind_parity_totals(const Row& row);

/// (#TypeA, #TypeB, size). Row 0 has no winger pair: std::invalid_argument.
CountTriple row_counts(const Row& row);
/// Label sums by kind. Row 0: std::invalid_argument.
SumTriple row_sums(const Row& row);

/// Middle cell of an odd-length row; NoCentralCell otherwise.
Cell central_cell(const Row& row);

/// Cell k of row n. std::out_of_range for k >= s_n; BudgetExceeded.
Cell kth_cell(const TriangleParams& params, std::size_t n, std::size_t k,
              std::size_t cell_budget = kDefaultCellBudget);

}  // namespace hpt
