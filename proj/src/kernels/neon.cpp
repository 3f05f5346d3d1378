// NEON variants for AArch64, where Advanced SIMD is always present.

#include "kernel_table.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace hpt::kernels::detail {
namespace {

bool pair_sums(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  const std::uint64_t* src = in.data();
  std::uint64_t* dst = out.data();
  uint64x2_t overflow = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t a = vld1q_u64(src + i);
    const uint64x2_t b = vld1q_u64(src + i + 1);
    const uint64x2_t s = vaddq_u64(a, b);
    overflow = vorrq_u64(overflow, vcltq_u64(s, a));
    vst1q_u64(dst + i, s);
  }
  bool ok = (vgetq_lane_u64(overflow, 0) | vgetq_lane_u64(overflow, 1)) == 0;
  for (; i < n; ++i) {
    dst[i] = src[i] + src[i + 1];
    ok &= dst[i] >= src[i];
  }
  return ok;
}

KindParitySums kind_parity_sums(std::span<const std::uint64_t> values,
                                std::span<const CellKind> kinds) {
  const std::size_t n = values.size();
  uint64x2_t sum[3] = {vdupq_n_u64(0), vdupq_n_u64(0), vdupq_n_u64(0)};
  uint64x2_t wraps[3] = {vdupq_n_u64(0), vdupq_n_u64(0), vdupq_n_u64(0)};
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t v = vld1q_u64(values.data() + i);
    uint64x2_t k = vdupq_n_u64(static_cast<std::uint64_t>(kinds[i]));
    k = vsetq_lane_u64(static_cast<std::uint64_t>(kinds[i + 1]), k, 1);
    for (int c = 0; c < 3; ++c) {
      const uint64x2_t masked =
          vandq_u64(vceqq_u64(k, vdupq_n_u64(static_cast<std::uint64_t>(c))), v);
      const uint64x2_t next = vaddq_u64(sum[c], masked);
      wraps[c] = vsubq_u64(wraps[c], vcltq_u64(next, sum[c]));
      sum[c] = next;
    }
  }
  // Lane 0 holds even indices, lane 1 odd ones.
  KindParitySums out;
  for (int c = 0; c < 3; ++c) {
    out.sums[c][0] = (static_cast<unsigned __int128>(vgetq_lane_u64(wraps[c], 0)) << 64) +
                     vgetq_lane_u64(sum[c], 0);
    out.sums[c][1] = (static_cast<unsigned __int128>(vgetq_lane_u64(wraps[c], 1)) << 64) +
                     vgetq_lane_u64(sum[c], 1);
  }
  return scalar_kind_parity_sums(values, kinds, i, out);
}

std::optional<std::size_t> find_adjacent(std::span<const std::uint64_t> values,
                                         std::uint64_t first, std::uint64_t second) {
  const std::size_t n = values.size();
  if (n < 2) return std::nullopt;
  const uint64x2_t f = vdupq_n_u64(first);
  const uint64x2_t s = vdupq_n_u64(second);
  std::size_t i = 0;
  for (; i + 3 <= n; i += 2) {
    const uint64x2_t hit = vandq_u64(vceqq_u64(vld1q_u64(values.data() + i), f),
                                     vceqq_u64(vld1q_u64(values.data() + i + 1), s));
    if (vgetq_lane_u64(hit, 0) != 0) return i;
    if (vgetq_lane_u64(hit, 1) != 0) return i + 1;
  }
  for (; i + 1 < n; ++i) {
    if (values[i] == first && values[i + 1] == second) return i;
  }
  return std::nullopt;
}

void pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words) {
  const std::size_t n = kinds.size();
  for (auto& w : words) w = 0;
  // Bit weights for one reversed 8-byte group: byte 7 is the lowest output bit.
  static const uint8_t weights_init[8] = {128, 64, 32, 16, 8, 4, 2, 1};
  const uint8x8_t weights = vld1_u8(weights_init);
  const uint8x8_t type_a = vdup_n_u8(static_cast<std::uint8_t>(CellKind::TypeA));
  std::size_t group = 0;
  for (; 8 * group + 8 <= n; ++group) {
    const std::size_t begin = n - 8 - 8 * group;
    const uint8x8_t k = vld1_u8(reinterpret_cast<const std::uint8_t*>(kinds.data()) + begin);
    const uint8x8_t not_a = vmvn_u8(vceq_u8(k, type_a));
    const std::uint64_t byte = vaddv_u8(vand_u8(not_a, weights));
    words[group / 8] |= byte << (8 * (group % 8));
  }
  scalar_pack_pattern_bits(kinds, words, 8 * group);
}

}  // namespace

const KernelTable& neon_table() noexcept {
  static constexpr KernelTable table{&pair_sums, &kind_parity_sums, &find_adjacent,
                                     &pack_pattern_bits};
  return table;
}

}  // namespace hpt::kernels::detail

#endif
