#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gcode {

using RowIndex = std::uint32_t;

/// Sparse vector over the two-element field, stored as a strictly
/// increasing sequence of row indices.
struct Z2Column {
  std::vector<RowIndex> support;

  bool is_zero() const { return support.empty(); }

  // Largest row index of the support; empty column has no pivot.
  std::optional<RowIndex> pivot() const {
    if (support.empty()) return std::nullopt;
    return support.back();
  }

  bool operator==(const Z2Column&) const = default;
};

/// Symmetric difference of the two supports (addition over Z2).
Z2Column column_add(const Z2Column& a, const Z2Column& b);

/// Record of column additions, in execution order. Source indices are
/// always strictly smaller than target indices.
struct ReductionLog {
  struct Event {
    std::size_t target;
    std::size_t source;
    bool operator==(const Event&) const = default;
  };
  std::vector<Event> events;
};

/// Left-to-right reduction: traverse columns in order and, while the
/// current column shares its pivot with an earlier column, add that
/// earlier column. The earlier column is always the unique one owning
/// the conflicting pivot, so the result is deterministic. Zero columns
/// stay in place; column indices are stable.
std::vector<Z2Column> reduce(std::vector<Z2Column> columns,
                             ReductionLog* log = nullptr);

}  // namespace gcode
