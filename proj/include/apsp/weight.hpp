#pragma once

#include <compare>
#include <cstdint>
#include <limits>

namespace apsp {

/// 1-based vertex id, stable through contraction. 0 is never a valid id.
using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = 0;

/// Largest finite edge weight accepted on input.
inline constexpr std::uint64_t kMaxInputWeight = 0xFFFF'FFFFull;

/// Non-negative integral edge weight or path length with a distinguished
/// infinity. Infinity is a reserved bit pattern, never the result of finite
/// arithmetic: a finite sum that would reach it is a logic error.
class Weight {
 public:
  static constexpr std::uint64_t kInfiniteBits = std::numeric_limits<std::uint64_t>::max();

  constexpr Weight() = default;
  constexpr explicit Weight(std::uint64_t value) : value_(value) {}

  static constexpr Weight infinity() { return Weight(kInfiniteBits); }

  constexpr bool is_infinite() const { return value_ == kInfiniteBits; }
  constexpr bool is_finite() const { return value_ != kInfiniteBits; }
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr Weight operator+(Weight a, Weight b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Weight(a.value_ + b.value_);
  }

  friend constexpr auto operator<=>(Weight, Weight) = default;

 private:
  std::uint64_t value_ = 0;
};

}  // namespace apsp
