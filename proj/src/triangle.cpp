#include "hpt/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hpt/errors.hpp"
#include "hpt/kernels.hpp"

namespace hpt {
namespace {

template <typename Value>
void lay_out_children(std::span<const Value> parent, std::span<const CellKind> parent_kinds,
                      std::span<const Value> pair_sums, const TriangleParams& params,
                      std::span<Value> values, std::span<CellKind> kinds) {
  const std::size_t m = parent.size();
  std::size_t pos = 0;
  values[pos] = 1;
  kinds[pos++] = CellKind::Winger;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (i > 0) {
      const std::size_t extra = params.private_children(parent_kinds[i]);
      std::fill_n(values.begin() + pos, extra, parent[i]);
      std::fill_n(kinds.begin() + pos, extra, CellKind::TypeB);
      pos += extra;
    }
    values[pos] = pair_sums[i];
    kinds[pos++] = CellKind::TypeA;
  }
  values[pos] = 1;
  kinds[pos++] = CellKind::Winger;
}

std::vector<BigInt> widen(std::span<const std::uint64_t> narrow) {
  std::vector<BigInt> out;
  out.reserve(narrow.size());
  for (std::uint64_t v : narrow) out.emplace_back(from_u128(v));
  return out;
}

}  // namespace

char kind_code(CellKind kind) noexcept {
  switch (kind) {
    case CellKind::Winger: return 'W';
    case CellKind::TypeA: return 'A';
    case CellKind::TypeB: return 'B';
  }
  return '?';
}

TriangleParams::TriangleParams(int q) : q_(q) {
  if (q < 4) throw std::invalid_argument("mosaic {4," + std::to_string(q) + "} needs q >= 4");
}

std::size_t TriangleParams::private_children(CellKind kind) const noexcept {
  switch (kind) {
    case CellKind::TypeA: return static_cast<std::size_t>(q_ - 4);
    case CellKind::TypeB: return static_cast<std::size_t>(q_ - 3);
    case CellKind::Winger: return 0;
  }
  return 0;
}

BigInt Row::value(std::size_t k) const {
  if (k >= size()) throw std::out_of_range("cell " + std::to_string(k) + " outside row " +
                                           std::to_string(n_));
  return wide_ ? wide_values_[k] : from_u128(narrow_[k]);
}

std::span<const std::uint64_t> Row::narrow_values() const {
  if (wide_) throw std::logic_error("row holds wide values");
  return narrow_;
}

std::span<const BigInt> Row::wide_values() const {
  if (!wide_) throw std::logic_error("row holds narrow values");
  return wide_values_;
}

std::vector<BigInt> Row::values() const { return wide_ ? wide_values_ : widen(narrow_); }

bool Row::is_palindrome() const {
  if (!std::equal(kinds_.begin(), kinds_.end(), kinds_.rbegin())) return false;
  return wide_ ? std::equal(wide_values_.begin(), wide_values_.end(), wide_values_.rbegin())
               : std::equal(narrow_.begin(), narrow_.end(), narrow_.rbegin());
}

Row initial_row() {
  Row row;
  row.kinds_ = {CellKind::Winger};
  row.narrow_ = {1};
  return row;
}

std::size_t next_row_size(const Row& row, const TriangleParams& params) {
  if (row.size() == 1) return 2;
  std::size_t total = row.size() + 1;
  for (std::size_t i = 1; i + 1 < row.size(); ++i) total += params.private_children(row.kind(i));
  return total;
}

Row next_row(const Row& row, const TriangleParams& params) {
  Row child;
  child.n_ = row.n_ + 1;
  if (row.size() == 1) {
    child.kinds_ = {CellKind::Winger, CellKind::Winger};
    child.narrow_ = {1, 1};
    return child;
  }

  const std::size_t count = next_row_size(row, params);
  child.kinds_.resize(count);

  if (!row.wide_) {
    std::vector<std::uint64_t> sums(row.size() - 1);
    if (kernels::pair_sums(row.narrow_, sums)) {
      child.narrow_.resize(count);
      lay_out_children<std::uint64_t>(row.narrow_, row.kinds_, sums, params, child.narrow_,
                                      child.kinds_);
      return child;
    }
  }

  // Wide path: the parent is wide already or one of its pair sums overflowed.
  const std::vector<BigInt> parent = row.wide_ ? std::vector<BigInt>{} : widen(row.narrow_);
  std::span<const BigInt> values = row.wide_ ? std::span<const BigInt>(row.wide_values_)
                                             : std::span<const BigInt>(parent);
  std::vector<BigInt> sums(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i) sums[i] = values[i] + values[i + 1];
  child.wide_ = true;
  child.wide_values_.resize(count);
  lay_out_children<BigInt>(values, row.kinds_, sums, params, child.wide_values_, child.kinds_);
  return child;
}

std::vector<Parents> child_parents(const Row& row, const TriangleParams& params) {
  std::vector<Parents> out;
  out.reserve(next_row_size(row, params));
  if (row.size() == 1) return {Parents{0, std::nullopt}, Parents{0, std::nullopt}};
  out.push_back({0, std::nullopt});
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    if (i > 0) out.insert(out.end(), params.private_children(row.kind(i)), Parents{i, std::nullopt});
    out.push_back({i, i + 1});
  }
  out.push_back({row.size() - 1, std::nullopt});
  return out;
}

void for_each_row(const TriangleParams& params, std::size_t n_max, std::size_t cell_budget,
                  const std::function<void(const Row&)>& visit) {
  if (cell_budget < 1) throw BudgetExceeded(0, 1, cell_budget);
  Row row = initial_row();
  visit(row);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::size_t cells = next_row_size(row, params);
    if (cells > cell_budget) throw BudgetExceeded(n, cells, cell_budget);
    row = next_row(row, params);
    visit(row);
  }
}

std::vector<Row> generate_rows(const TriangleParams& params, std::size_t n_max,
                               std::size_t cell_budget) {
  std::vector<Row> rows;
  for_each_row(params, n_max, cell_budget, [&rows](const Row& row) { rows.push_back(row); });
  return rows;
}

RowCache::RowCache(TriangleParams params, std::size_t cell_budget)
    : params_(params), budget_(cell_budget) {}

const Row& RowCache::row(std::size_t n) {
  if (rows_.empty()) {
    if (budget_ < 1) throw BudgetExceeded(0, 1, budget_);
    rows_.push_back(initial_row());
  }
  while (rows_.size() <= n) {
    const Row& last = rows_.back();
    const std::size_t cells = next_row_size(last, params_);
    if (cells > budget_) throw BudgetExceeded(rows_.size(), cells, budget_);
    Row next = next_row(last, params_);
    rows_.push_back(std::move(next));
  }
  return rows_[n];
}

KindParityTotals kind_parity_totals(const Row& row) {
  KindParityTotals totals;
  if (!row.is_wide()) {
    const auto sums = kernels::kind_parity_sums(row.narrow_values(), row.kinds());
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t p = 0; p < 2; ++p) totals[k][p] = from_u128(sums.sums[k][p]);
    return totals;
  }
  const auto values = row.wide_values();
  for (std::size_t i = 0; i < values.size(); ++i)
    totals[static_cast<std::size_t>(row.kind(i))][i & 1U] += values[i];
  return totals;
}

namespace {

void require_winger_pair(const Row& row, const char* what) {
  if (row.index() == 0)
    throw std::invalid_argument(std::string(what) + " is undefined for row 0 (no winger pair)");
}

}  // namespace

CountTriple row_counts(const Row& row) {
  require_winger_pair(row, "row_counts");
  const auto kinds = row.kinds();
  const auto a = std::count(kinds.begin(), kinds.end(), CellKind::TypeA);
  const auto b = std::count(kinds.begin(), kinds.end(), CellKind::TypeB);
  return {BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)),
          BigInt(static_cast<unsigned long>(row.size()))};
}

SumTriple row_sums(const Row& row) {
  require_winger_pair(row, "row_sums");
  const KindParityTotals t = kind_parity_totals(row);
  constexpr auto A = static_cast<std::size_t>(CellKind::TypeA);
  constexpr auto B = static_cast<std::size_t>(CellKind::TypeB);
  constexpr auto W = static_cast<std::size_t>(CellKind::Winger);
  SumTriple out{t[A][0] + t[A][1], t[B][0] + t[B][1], 0};
  out.sum = out.sum_a + out.sum_b + t[W][0] + t[W][1];
  return out;
}

Cell central_cell(const Row& row) {
  if (row.size() % 2 == 0)
    throw NoCentralCell("row " + std::to_string(row.index()) + " has an even number of cells (" +
                        std::to_string(row.size()) + ")");
  return row.cell(row.size() / 2);
}

Cell kth_cell(const TriangleParams& params, std::size_t n, std::size_t k, std::size_t cell_budget) {
  std::optional<Cell> found;
  for_each_row(params, n, cell_budget, [&](const Row& row) {
    if (row.index() != n) return;
    if (k >= row.size())
      throw std::out_of_range("cell " + std::to_string(k) + " outside row " + std::to_string(n) +
                              " of " + std::to_string(row.size()) + " cells");
    found = row.cell(k);
  });
  return *found;
}

}  // namespace hpt
