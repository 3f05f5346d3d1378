#include <atomic>
#include <stdexcept>
#include <string>

#include "kernel_table.hpp"

namespace hpt::kernels {
namespace {

using detail::KernelTable;

const KernelTable* table_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return &detail::scalar_table();
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("bmi")) return &detail::avx2_table();
#endif
      return nullptr;
    case Backend::Neon:
#if defined(__aarch64__)
      return &detail::neon_table();
#else
      return nullptr;
#endif
  }
  return nullptr;
}

struct Active {
  std::atomic<const KernelTable*> table{table_for(best_backend())};
  std::atomic<Backend> backend{best_backend()};
};

Active& active() {
  static Active state;
  return state;
}

const KernelTable& current() { return *active().table.load(std::memory_order_acquire); }

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend backend) noexcept { return table_for(backend) != nullptr; }

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::Scalar, Backend::Avx2, Backend::Neon}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

Backend best_backend() noexcept {
  if (backend_supported(Backend::Avx2)) return Backend::Avx2;
  if (backend_supported(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

Backend active_backend() noexcept { return active().backend.load(std::memory_order_acquire); }

void set_backend(Backend backend) {
  const KernelTable* table = table_for(backend);
  if (table == nullptr)
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(backend)) +
                                "' is not supported on this machine");
  active().table.store(table, std::memory_order_release);
  active().backend.store(backend, std::memory_order_release);
}

bool pair_sums(std::span<const std::uint64_t> in, std::span<std::uint64_t> out) {
  if (in.empty() && out.empty()) return true;
  if (out.size() + 1 != in.size()) throw std::invalid_argument("pair_sums: size mismatch");
  return current().pair_sums(in, out);
}

KindParitySums kind_parity_sums(std::span<const std::uint64_t> values,
                                std::span<const CellKind> kinds) {
  if (values.size() != kinds.size()) throw std::invalid_argument("kind_parity_sums: size mismatch");
  return current().kind_parity_sums(values, kinds);
}

std::optional<std::size_t> find_adjacent(std::span<const std::uint64_t> values,
                                         std::uint64_t first, std::uint64_t second) {
  return current().find_adjacent(values, first, second);
}

void pack_pattern_bits(std::span<const CellKind> kinds, std::span<std::uint64_t> words) {
  if (words.size() != (kinds.size() + 63) / 64)
    throw std::invalid_argument("pack_pattern_bits: word count mismatch");
  current().pack_pattern_bits(kinds, words);
}

}  // namespace hpt::kernels
