#include "kernel_table.hpp"

#include <algorithm>

namespace hpt::kernels::detail {
namespace {

bool pair_sums(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  bool ok = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = in[i] + in[i + 1];
    ok &= out[i] >= in[i];
  }
  return ok;
}

KindParitySums kind_parity_sums(std::span<const std::uint64_t> values,
                                std::span<const CellKind> kinds) {
  return scalar_kind_parity_sums(values, kinds, 0, {});
}

std::optional<std::size_t> find_adjacent(std::span<const std::uint64_t> values,
                                         std::uint64_t first, std::uint64_t second) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] == first && values[i + 1] == second) return i;
  }
  return std::nullopt;
}

void pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words) {
  std::fill(words.begin(), words.end(), 0);
  scalar_pack_pattern_bits(kinds, words, 0);
}

}  // namespace

KindParitySums scalar_kind_parity_sums(std::span<const std::uint64_t> values,
                                       std::span<const CellKind> kinds, std::size_t begin,
                                       KindParitySums acc) {
  for (std::size_t i = begin; i < values.size(); ++i) {
    acc.sums[static_cast<std::size_t>(kinds[i])][i & 1U] += values[i];
  }
  return acc;
}

void scalar_pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words,
                              std::size_t begin_bit) {
  const std::size_t n = kinds.size();
  for (std::size_t p = begin_bit; p < n; ++p) {
    if (kinds[n - 1 - p] != CellKind::TypeA) words[p / 64] |= std::uint64_t{1} << (p % 64);
  }
}

const KernelTable& scalar_table() noexcept {
  static constexpr KernelTable table{&pair_sums, &kind_parity_sums, &find_adjacent,
                                     &pack_pattern_bits};
  return table;
}

}  // namespace hpt::kernels::detail
