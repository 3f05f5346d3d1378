// AVX2 variants. Compiled without -mavx2; each function opts in through the
// target attribute so that no inline library code in this translation unit
// is emitted with AVX2 encodings (those could be picked by the linker for
// callers running on older CPUs).

#include "kernel_table.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

#define HPT_AVX2 __attribute__((target("avx2,bmi")))

namespace hpt::kernels::detail {
namespace {

// a < b as unsigned 64-bit lanes.
HPT_AVX2 inline __m256i less_u64(__m256i a, __m256i b) {
  const __m256i bias = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ULL));
  return _mm256_cmpgt_epi64(_mm256_xor_si256(b, bias), _mm256_xor_si256(a, bias));
}

HPT_AVX2 bool pair_sums(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  const std::uint64_t* src = in.data();
  std::uint64_t* dst = out.data();
  __m256i overflow = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
    const __m256i s = _mm256_add_epi64(a, b);
    overflow = _mm256_or_si256(overflow, less_u64(s, a));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  bool ok = _mm256_testz_si256(overflow, overflow) != 0;
  for (; i < n; ++i) {
    dst[i] = src[i] + src[i + 1];
    ok &= dst[i] >= src[i];
  }
  return ok;
}

struct LaneAccumulator {
  __m256i sum;
  __m256i carries;  // counts of 2^64 wraps, stored negated
};

HPT_AVX2 inline void accumulate(LaneAccumulator& acc, __m256i v) {
  const __m256i next = _mm256_add_epi64(acc.sum, v);
  acc.carries = _mm256_add_epi64(acc.carries, less_u64(next, acc.sum));
  acc.sum = next;
}

HPT_AVX2 KindParitySums kind_parity_sums(std::span<const std::uint64_t> values,
                                         std::span<const CellKind> kinds) {
  const std::size_t n = values.size();
  LaneAccumulator acc[3];
  for (auto& a : acc) a = {_mm256_setzero_si256(), _mm256_setzero_si256()};
  const __m256i kind_vec[3] = {_mm256_set1_epi64x(0), _mm256_set1_epi64x(1),
                               _mm256_set1_epi64x(2)};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
    std::int32_t packed;
    std::memcpy(&packed, kinds.data() + i, sizeof(packed));
    const __m256i k = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
    for (int c = 0; c < 3; ++c) {
      accumulate(acc[c], _mm256_and_si256(_mm256_cmpeq_epi64(k, kind_vec[c]), v));
    }
  }

  // Lanes 0 and 2 hold even indices, 1 and 3 odd ones (i starts at 0, step 4).
  KindParitySums out;
  for (int c = 0; c < 3; ++c) {
    alignas(32) std::uint64_t sum[4];
    alignas(32) std::int64_t carries[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(sum), acc[c].sum);
    _mm256_store_si256(reinterpret_cast<__m256i*>(carries), acc[c].carries);
    for (int lane = 0; lane < 4; ++lane) {
      const auto wraps = static_cast<unsigned __int128>(-carries[lane]);
      out.sums[c][lane & 1] += (wraps << 64) + sum[lane];
    }
  }
  return scalar_kind_parity_sums(values, kinds, i, out);
}

HPT_AVX2 std::optional<std::size_t> find_adjacent(std::span<const std::uint64_t> values,
                                                  std::uint64_t first, std::uint64_t second) {
  const std::size_t n = values.size();
  if (n < 2) return std::nullopt;
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(first));
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(second));
  const std::uint64_t* src = values.data();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 1));
    const __m256i hit = _mm256_and_si256(_mm256_cmpeq_epi64(a, f), _mm256_cmpeq_epi64(b, s));
    const int mask = _mm256_movemask_pd(_mm256_castsi256_pd(hit));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(static_cast<unsigned>(mask)));
  }
  for (; i + 1 < n; ++i) {
    if (src[i] == first && src[i + 1] == second) return i;
  }
  return std::nullopt;
}

inline std::uint32_t reverse_bits(std::uint32_t x) {
  x = ((x >> 1) & 0x55555555U) | ((x & 0x55555555U) << 1);
  x = ((x >> 2) & 0x33333333U) | ((x & 0x33333333U) << 2);
  x = ((x >> 4) & 0x0F0F0F0FU) | ((x & 0x0F0F0F0FU) << 4);
  x = ((x >> 8) & 0x00FF00FFU) | ((x & 0x00FF00FFU) << 8);
  return (x >> 16) | (x << 16);
}

HPT_AVX2 void pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words) {
  const std::size_t n = kinds.size();
  for (auto& w : words) w = 0;
  const __m256i type_a = _mm256_set1_epi8(static_cast<char>(CellKind::TypeA));
  // Output bits [32c, 32c + 32) come from kinds[n - 32 - 32c, n - 32c), reversed.
  std::size_t chunk = 0;
  for (; 32 * chunk + 32 <= n; ++chunk) {
    const std::size_t begin = n - 32 - 32 * chunk;
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(kinds.data() + begin));
    const auto is_a = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(k, type_a)));
    const std::uint64_t bits = reverse_bits(~is_a);
    words[chunk / 2] |= bits << (32 * (chunk % 2));
  }
  scalar_pack_pattern_bits(kinds, words, 32 * chunk);
}

}  // namespace

const KernelTable& avx2_table() noexcept {
  static constexpr KernelTable table{&pair_sums, &kind_parity_sums, &find_adjacent,
                                     &pack_pattern_bits};
  return table;
}

}  // namespace hpt::kernels::detail

#endif
