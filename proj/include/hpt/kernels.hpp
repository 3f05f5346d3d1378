#pragma once

// Data-parallel inner loops over narrow (uint64) rows.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (AArch64) variant. The variant is
// chosen once at startup from the CPU features and can be overridden with
// set_backend(); all variants must produce bit-identical results.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hpt/cell.hpp"

namespace hpt::kernels {

enum class Backend : std::uint8_t { Scalar, Avx2, Neon };

std::string_view backend_name(Backend backend) noexcept;
bool backend_supported(Backend backend) noexcept;
/// Backends usable on this machine, Scalar first.
std::vector<Backend> supported_backends();
/// Fastest supported backend for the running CPU.
Backend best_backend() noexcept;
Backend active_backend() noexcept;
/// Throws std::invalid_argument if the backend is not supported here.
void set_backend(Backend backend);

/// Sums of values split by cell kind and by index parity.
struct KindParitySums {
  // sums[kind][index % 2]
  std::array<std::array<unsigned __int128, 2>, 3> sums{};

  unsigned __int128 at(CellKind kind, std::size_t parity) const {
    return sums[static_cast<std::size_t>(kind)][parity];
  }
  friend bool operator==(const KindParitySums&, const KindParitySums&) = default;
};

/// out[i] = in[i] + in[i + 1] for i < in.size() - 1.
/// Returns false if any sum overflows 64 bits; out is unspecified then.
/// Requires out.size() + 1 == in.size() (or both empty).
bool pair_sums(std::span<const std::uint64_t> in, std::span<std::uint64_t> out);

/// Requires values.size() == kinds.size().
KindParitySums kind_parity_sums(std::span<const std::uint64_t> values,
                                std::span<const CellKind> kinds);

/// Smallest i with values[i] == first and values[i + 1] == second.
std::optional<std::size_t> find_adjacent(std::span<const std::uint64_t> values,
                                         std::uint64_t first, std::uint64_t second);

/// Packs the A/B pattern as a binary number: kinds[0] is the most significant
/// bit, TypeA is 0, anything else is 1. Bit p of the number lands in
/// words[p / 64] at position p % 64. Requires words.size() == ceil(size / 64).
void pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words);

}  // namespace hpt::kernels
