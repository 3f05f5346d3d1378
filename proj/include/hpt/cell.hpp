#pragma once

#include <cstdint>

#include "hpt/bigint.hpp"

namespace hpt {

enum class CellKind : std::uint8_t { Winger = 0, TypeA = 1, TypeB = 2 };

/// One-letter code used by the serializers: "W", "A", "B".
char kind_code(CellKind kind) noexcept;

struct Cell {
  BigInt value;
  CellKind kind = CellKind::Winger;

  friend bool operator==(const Cell&, const Cell&) = default;
};

}  // namespace hpt
