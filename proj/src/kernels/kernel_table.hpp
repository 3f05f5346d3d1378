#pragma once

#include "hpt/kernels.hpp"

namespace hpt::kernels::detail {

struct KernelTable {
  bool (*pair_sums)(std::span<const std::uint64_t>, std::span<std::uint64_t>);
  KindParitySums (*kind_parity_sums)(std::span<const std::uint64_t>, std::span<const CellKind>);
  std::optional<std::size_t> (*find_adjacent)(std::span<const std::uint64_t>, std::uint64_t,
                                              std::uint64_t);
  void (*pack_pattern_bits)(std::span<const CellKind>, std::span<std::uint64_t>);
};

const KernelTable& scalar_table() noexcept;
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_table() noexcept;
#endif
#if defined(__aarch64__)
const KernelTable& neon_table() noexcept;
#endif

// Scalar tails shared by the vector variants.
KindParitySums scalar_kind_parity_sums(std::span<const std::uint64_t> values,
                                       std::span<const CellKind> kinds, std::size_t begin,
                                       KindParitySums acc);
void scalar_pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words,
                              std::size_t begin_bit);

}  // namespace hpt::kernels::detail
